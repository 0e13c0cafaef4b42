"""Exact cost model for penalized network creation games.

A game has ``n`` players, an edge price ``alpha`` and a disconnection penalty
``beta``.  Each player unilaterally buys a set of undirected links to other
players; the union of all purchases induces an undirected graph.  A player
pays ``alpha`` per link it bought, the shortest-path distance to every player
it can reach, and ``beta`` for every player it cannot reach.  Setting
``beta = INFINITE`` recovers the classic network creation game in which
disconnection is infinitely expensive.

Everything here is exact: prices and costs are `fractions.Fraction` values,
with `math.inf` as the single distinguished infinite value (it compares and
adds exactly against rationals in CPython).  Distances are integers; a
disconnected pair is marked ``None`` in the distance matrix.

Conventions used throughout the package:

* players are ``0 .. n-1``;
* an edge is a pair ``(i, j)`` with ``i < j``;
* buying a link that the other endpoint also bought is legal (both pay
  ``alpha``, the graph gains a single edge);
* ties and scan orders are deterministic: players ascending, strategies
  ordered by size then lexicographically by sorted target tuple.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

INFINITE = math.inf

Cost = Union[Fraction, float]  # the float arm is only ever INFINITE


def is_infinite(value: Cost) -> bool:
    return value == INFINITE


def as_rational(value) -> Fraction:
    """Convert ints, strings like ``3/2``, and Fractions to an exact Fraction."""
    if isinstance(value, float):
        raise ValueError(f"refusing inexact float {value!r}; pass a Fraction or 'p/q' string")
    return Fraction(value)


def as_penalty(value) -> Cost:
    """Like :func:`as_rational` but admitting the infinite penalty."""
    if value == INFINITE or (isinstance(value, str) and value.strip().lower() == "inf"):
        return INFINITE
    return as_rational(value)


@dataclass(frozen=True)
class GameParams:
    """Population size and prices.  Rejects n < 2, alpha <= 0 and beta <= 1."""

    n: int
    alpha: Fraction
    beta: Cost

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_penalty(self.beta))
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if not self.beta > 1:
            raise ValueError(f"beta must exceed 1, got {self.beta}")

    @property
    def is_ncg(self) -> bool:
        """True when disconnection is infinitely expensive."""
        return self.beta == INFINITE


@dataclass(frozen=True)
class StrategyVector:
    """One link-purchase set per player; ``strategies[i]`` never contains i."""

    strategies: tuple

    def __post_init__(self):
        strategies = tuple(frozenset(s) for s in self.strategies)
        object.__setattr__(self, "strategies", strategies)
        n = len(strategies)
        if n < 1:
            raise ValueError("empty strategy vector")
        for i, targets in enumerate(strategies):
            for j in targets:
                if not isinstance(j, int) or not 0 <= j < n:
                    raise ValueError(f"player {i}: target {j!r} out of range 0..{n - 1}")
                if j == i:
                    raise ValueError(f"player {i} cannot buy a link to itself")

    @property
    def n(self) -> int:
        return len(self.strategies)

    def __getitem__(self, i: int) -> frozenset:
        return self.strategies[i]

    def replace(self, player: int, new_strategy: Iterable[int]) -> "StrategyVector":
        parts = list(self.strategies)
        parts[player] = frozenset(new_strategy)
        return StrategyVector(tuple(parts))

    def purchases(self, player: int) -> int:
        return len(self.strategies[player])

    def total_purchases(self) -> int:
        return sum(len(s) for s in self.strategies)

    def masks(self) -> tuple:
        """Bitmask form: bit j of masks[i] set iff i buys the link to j."""
        out = []
        for targets in self.strategies:
            m = 0
            for j in targets:
                m |= 1 << j
            out.append(m)
        return tuple(out)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "StrategyVector":
        n = len(masks)
        return cls(tuple(frozenset(j for j in range(n) if m >> j & 1) for m in masks))

    @classmethod
    def empty(cls, n: int) -> "StrategyVector":
        return cls(tuple(frozenset() for _ in range(n)))


@dataclass(frozen=True)
class InducedGraph:
    """Undirected graph induced by a strategy vector, with edge ownership.

    ``edges`` is sorted; ``owners[k]`` is the set of endpoints that paid for
    ``edges[k]`` (both endpoints when the purchase was duplicated).
    """

    n: int
    edges: tuple
    owners: tuple

    def has_edge(self, i: int, j: int) -> bool:
        a, b = (i, j) if i < j else (j, i)
        return (a, b) in self.edges

    def buyers(self, i: int, j: int) -> frozenset:
        a, b = (i, j) if i < j else (j, i)
        for edge, owner in zip(self.edges, self.owners):
            if edge == (a, b):
                return owner
        raise KeyError(f"no edge ({a}, {b})")

    def purchases_of(self, player: int) -> int:
        return sum(1 for owner in self.owners if player in owner)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list:
        adj = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def degree(self, player: int) -> int:
        return sum(1 for i, j in self.edges if player in (i, j))


def induce_graph(state: StrategyVector) -> InducedGraph:
    """Union of all purchases, remembering who paid for each edge."""
    n = state.n
    owners = {}
    for i, targets in enumerate(state.strategies):
        for j in targets:
            edge = (i, j) if i < j else (j, i)
            owners.setdefault(edge, set()).add(i)
    edges = tuple(sorted(owners))
    return InducedGraph(n, edges, tuple(frozenset(owners[e]) for e in edges))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; ``None`` marks a disconnected pair."""

    entries: tuple

    @property
    def n(self) -> int:
        return len(self.entries)

    def distance(self, i: int, j: int) -> Optional[int]:
        return self.entries[i][j]

    def finite_sum(self, i: int) -> int:
        return sum(d for d in self.entries[i] if d)

    def missing_count(self, i: int) -> int:
        return sum(1 for d in self.entries[i] if d is None)

    @property
    def connected(self) -> bool:
        return all(d is not None for row in self.entries for d in row)


def _bfs_row(adj: Sequence[set], source: int, n: int) -> list:
    row = [None] * n
    row[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if row[w] is None:
                row[w] = row[v] + 1
                queue.append(w)
    return row


def all_pairs_distances(graph: InducedGraph) -> DistanceMatrix:
    adj = graph.adjacency()
    return DistanceMatrix(tuple(tuple(_bfs_row(adj, v, graph.n)) for v in range(graph.n)))


@dataclass(frozen=True)
class CostBreakdown:
    """One player's cost, split into link, distance and penalty parts."""

    edge_cost: Fraction
    distance_cost: int
    penalty_cost: Cost

    @property
    def total(self) -> Cost:
        return self.edge_cost + self.distance_cost + self.penalty_cost


def _penalty(beta: Cost, missing: int) -> Cost:
    # branch so INFINITE * 0 never happens
    return beta * missing if missing else Fraction(0)


def individual_cost(state: StrategyVector, player: int, params: GameParams) -> CostBreakdown:
    """alpha per bought link + distance to every reachable player + beta per unreachable one."""
    if state.n != params.n:
        raise ValueError(f"state has {state.n} players, params expect {params.n}")
    graph = induce_graph(state)
    row = _bfs_row(graph.adjacency(), player, state.n)
    finite = sum(d for d in row if d)
    missing = sum(1 for d in row if d is None)
    return CostBreakdown(
        edge_cost=params.alpha * state.purchases(player),
        distance_cost=finite,
        penalty_cost=_penalty(params.beta, missing),
    )


def social_cost(state: StrategyVector, params: GameParams) -> Cost:
    """Sum of all individual costs, computed at the graph level.

    Ownership-independent up to the total number of purchases: the distance
    and penalty terms depend only on the induced graph.
    """
    if state.n != params.n:
        raise ValueError(f"state has {state.n} players, params expect {params.n}")
    graph = induce_graph(state)
    adj = graph.adjacency()
    finite = 0
    missing = 0
    for v in range(state.n):
        row = _bfs_row(adj, v, state.n)
        finite += sum(d for d in row if d)
        missing += sum(1 for d in row if d is None)
    return params.alpha * state.total_purchases() + finite + _penalty(params.beta, missing)


def cost_delta(state: StrategyVector, player: int, new_strategy: Iterable[int], params: GameParams) -> Cost:
    """Cost change for ``player`` when switching to ``new_strategy``, others fixed.

    Negative means the switch is strictly profitable.  When both sides are
    infinite (NCG mode, player disconnected before and after) the delta is 0.
    """
    before = individual_cost(state, player, params).total
    after = individual_cost(state.replace(player, new_strategy), player, params).total
    if is_infinite(before) and is_infinite(after):
        return Fraction(0)
    return after - before


@dataclass(frozen=True)
class Component:
    """A connected component: vertex set, internal edge count, diameter."""

    vertices: frozenset
    edge_count: int
    diameter: int

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple  # ordered by smallest vertex

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    @property
    def sizes(self) -> tuple:
        return tuple(c.size for c in self.components)

    def nonsingleton(self) -> tuple:
        return tuple(c for c in self.components if c.size > 1)

    def smallest_nonsingleton(self) -> Optional[Component]:
        """The smallest component with at least two vertices (ties by vertex id)."""
        candidates = self.nonsingleton()
        if not candidates:
            return None
        return min(candidates, key=lambda c: (c.size, min(c.vertices)))


def components(state: StrategyVector) -> ComponentDecomposition:
    return graph_components(induce_graph(state))


def graph_components(graph: InducedGraph) -> ComponentDecomposition:
    n = graph.n
    adj = graph.adjacency()
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        verts = {start}
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    verts.add(w)
                    stack.append(w)
        edge_count = sum(1 for i, j in graph.edges if i in verts)
        diameter = 0
        for v in verts:
            row = _bfs_row(adj, v, n)
            diameter = max(diameter, max(row[w] for w in verts))
        out.append(Component(frozenset(verts), edge_count, diameter))
    return ComponentDecomposition(tuple(out))


def random_state(n: int, rng) -> StrategyVector:
    """Uniform random state: each possible target bought with probability 1/2.

    ``rng`` is any source with ``getrandbits`` (e.g. ``random.Random``), so
    trajectories are reproducible from a seed.
    """
    buys = []
    for i in range(n):
        bits = rng.getrandbits(n - 1)
        targets = set()
        for b in range(n - 1):
            if bits >> b & 1:
                targets.add(b if b < i else b + 1)
        buys.append(frozenset(targets))
    return StrategyVector(tuple(buys))
