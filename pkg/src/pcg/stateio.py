"""Flat-file serialization of game states.

Format (version 1), one state per file:

    pcg-state v1
    n 5
    alpha 3/2
    beta inf
    buys 0 : 1 2
    buys 1 :
    ...

Exactly one ``buys`` line per player, ascending.  Rationals are written in
lowest terms with positive denominator (integers print bare); the infinite
penalty prints as ``inf``.  ``parse_state(serialize_state(s, p))`` returns
``(s, p)`` exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TextIO, Tuple, Union

from .game import Cost, GameParams, INFINITE, StrategyVector, as_penalty, as_rational, is_infinite

HEADER = "pcg-state v1"


class StateParseError(ValueError):
    """Malformed or invalid state file; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_value(value: Cost) -> str:
    """Canonical text for a rational or the infinite penalty."""
    if is_infinite(value):
        return "inf"
    return str(Fraction(value))


def parse_value(text: str, *, allow_inf: bool = False) -> Cost:
    text = text.strip()
    if text.lower() == "inf":
        if not allow_inf:
            raise ValueError("inf not allowed here")
        return INFINITE
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r}") from exc


def serialize_state(state: StrategyVector, params: GameParams) -> str:
    if state.n != params.n:
        raise ValueError(f"state has {state.n} players, params expect {params.n}")
    lines = [
        HEADER,
        f"n {params.n}",
        f"alpha {format_value(params.alpha)}",
        f"beta {format_value(params.beta)}",
    ]
    for i, targets in enumerate(state.strategies):
        body = " ".join(str(t) for t in sorted(targets))
        lines.append(f"buys {i} :" + (f" {body}" if body else ""))
    return "\n".join(lines) + "\n"


def parse_state(text: Union[str, TextIO]) -> Tuple[StrategyVector, GameParams]:
    """Parse a v1 state file; raises :class:`StateParseError` with a line number."""
    if not isinstance(text, str):
        text = text.read()
    raw_lines = text.splitlines()
    # trailing blank lines are tolerated, interior ones are not
    while raw_lines and not raw_lines[-1].strip():
        raw_lines.pop()
    if not raw_lines:
        raise StateParseError(1, "empty input")
    if raw_lines[0].strip() != HEADER:
        raise StateParseError(1, f"expected header {HEADER!r}, got {raw_lines[0]!r}")

    n = _parse_header_int(raw_lines, 2, "n")
    if n < 2:
        raise StateParseError(2, f"n must be >= 2, got {n}")
    alpha = _parse_header_value(raw_lines, 3, "alpha", allow_inf=False)
    if alpha <= 0:
        raise StateParseError(3, f"alpha must be positive, got {format_value(alpha)}")
    beta = _parse_header_value(raw_lines, 4, "beta", allow_inf=True)
    if not beta > 1:
        raise StateParseError(4, f"beta must exceed 1, got {format_value(beta)}")

    expected = 4 + n
    if len(raw_lines) != expected:
        raise StateParseError(
            min(len(raw_lines), expected) + 1,
            f"expected {n} buys lines (file of {expected} lines), got {len(raw_lines) - 4}",
        )
    strategies = []
    for i in range(n):
        lineno = 5 + i
        line = raw_lines[4 + i].strip()
        head, sep, tail = line.partition(":")
        parts = head.split()
        if len(parts) != 2 or parts[0] != "buys" or not sep:
            raise StateParseError(lineno, f"expected 'buys {i} : ...', got {line!r}")
        try:
            player = int(parts[1])
        except ValueError:
            raise StateParseError(lineno, f"bad player id {parts[1]!r}") from None
        if player != i:
            raise StateParseError(lineno, f"buys lines must be ascending: expected player {i}, got {player}")
        targets = []
        for token in tail.split():
            try:
                t = int(token)
            except ValueError:
                raise StateParseError(lineno, f"bad target {token!r}") from None
            if not 0 <= t < n:
                raise StateParseError(lineno, f"target {t} out of range 0..{n - 1}")
            if t == i:
                raise StateParseError(lineno, f"player {i} cannot buy a link to itself")
            if t in targets:
                raise StateParseError(lineno, f"duplicate target {t}")
            targets.append(t)
        strategies.append(frozenset(targets))
    return StrategyVector(tuple(strategies)), GameParams(n=n, alpha=alpha, beta=beta)


def _parse_header_int(lines: list, lineno: int, key: str) -> int:
    value = _header_field(lines, lineno, key)
    try:
        return int(value)
    except ValueError:
        raise StateParseError(lineno, f"bad integer {value!r} for {key}") from None


def _parse_header_value(lines: list, lineno: int, key: str, *, allow_inf: bool) -> Cost:
    value = _header_field(lines, lineno, key)
    try:
        return parse_value(value, allow_inf=allow_inf)
    except ValueError as exc:
        raise StateParseError(lineno, f"{key}: {exc}") from None


def _header_field(lines: list, lineno: int, key: str) -> str:
    if len(lines) < lineno:
        raise StateParseError(lineno, f"missing {key!r} line")
    parts = lines[lineno - 1].split(None, 1)
    if len(parts) != 2 or parts[0] != key:
        raise StateParseError(lineno, f"expected '{key} <value>', got {lines[lineno - 1]!r}")
    return parts[1]
