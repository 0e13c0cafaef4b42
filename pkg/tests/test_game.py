"""Cost function and graph layer.

Core claims checked here:
  * individual costs decompose as edge + distance + penalty and sum to the
    social cost (ownership drops out of the social side only through the
    edge-count term);
  * duplicate purchases of one edge are legal and each copy is billed;
  * the infinite-penalty mode prices any disconnection at infinity;
  * parameters outside alpha > 0, beta > 1 are rejected with the constraint
    in the message.
"""

import random
from fractions import Fraction as F

import pytest

from pcg.game import (
    INFINITE,
    GameParams,
    StrategyVector,
    all_pairs_distances,
    components,
    cost_delta,
    individual_cost,
    induce_graph,
    is_infinite,
    random_state,
    social_cost,
)


def sv(*buys):
    return StrategyVector(tuple(frozenset(b) for b in buys))


PATH3 = sv({1}, {2}, set())  # 0-1-2, each edge bought once


# -- exact cost oracles (worked by hand) ---------------------------------------------


def test_path_individual_costs():
    p = GameParams(3, F(2), F(7, 4))
    # player 0: one edge (2) + distances 1+2; player 1: 2+1+1; player 2: 0+2+1
    assert individual_cost(PATH3, 0, p).total == 5
    assert individual_cost(PATH3, 1, p).total == 4
    assert individual_cost(PATH3, 2, p).total == 3


def test_path_social_cost_is_sum_of_individuals():
    p = GameParams(3, F(2), F(7, 4))
    assert social_cost(PATH3, p) == 12
    assert social_cost(PATH3, p) == sum(
        individual_cost(PATH3, i, p).total for i in range(3)
    )


def test_breakdown_fields():
    p = GameParams(4, F(3), F(3, 2))
    state = sv({1}, set(), set(), set())  # pair + two singletons
    b0 = individual_cost(state, 0, p)
    assert (b0.edge_cost, b0.distance_cost, b0.penalty_cost) == (F(3), 1, F(3))
    assert b0.total == 7
    b2 = individual_cost(state, 2, p)
    assert b2.edge_cost == 0 and b2.distance_cost == 0
    assert b2.penalty_cost == F(9, 2)  # three unreachable players at beta=3/2
    assert social_cost(state, p) == 20


def test_duplicate_purchase_billed_per_copy():
    p = GameParams(3, F(2), F(7, 4))
    doubled = sv({1}, {0, 2}, set())  # edge {0,1} bought by both endpoints
    assert induce_graph(doubled).edges == induce_graph(PATH3).edges
    assert social_cost(doubled, p) == social_cost(PATH3, p) + 2
    assert individual_cost(doubled, 1, p).edge_cost == 4


def test_complete_graph_cost_formula():
    # C(n,2) * (alpha + 2) when every edge is bought once
    p = GameParams(4, F(1, 2), F(7, 5))
    comp = sv({1, 2, 3}, {2, 3}, {3}, set())
    assert social_cost(comp, p) == 6 * (F(1, 2) + 2)


def test_infinite_penalty_disconnection():
    p = GameParams(3, F(1), INFINITE)
    state = sv({1}, set(), set())
    assert is_infinite(social_cost(state, p))
    assert is_infinite(individual_cost(state, 2, p).penalty_cost)
    # connected states stay finite: 2 edges at alpha=1 plus distance sum 8
    assert social_cost(PATH3, p) == 10


def test_cost_delta_matches_direct_recomputation():
    p = GameParams(3, F(2), F(7, 4))
    # player 2 closes the triangle: 2 + 1 + 1 = 4 against current 3
    assert cost_delta(PATH3, 2, {0}, p) == 1
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(3, 6)
        params = GameParams(n, F(rng.randrange(1, 9), 2), F(rng.randrange(3, 9), 2))
        state = random_state(n, rng)
        mover = rng.randrange(n)
        new = frozenset(
            t for t in range(n) if t != mover and rng.random() < 0.5
        )
        before = individual_cost(state, mover, params).total
        after = individual_cost(state.replace(mover, new), mover, params).total
        assert cost_delta(state, mover, new, params) == after - before


# -- parameter and strategy validation -----------------------------------------------


def test_alpha_must_be_positive():
    with pytest.raises(ValueError, match="alpha must be positive"):
        GameParams(3, F(0), F(2))
    with pytest.raises(ValueError, match="alpha must be positive"):
        GameParams(3, F(-1), F(2))


def test_beta_must_exceed_one():
    with pytest.raises(ValueError, match="beta must exceed 1"):
        GameParams(3, F(1), F(1))
    with pytest.raises(ValueError, match="beta must exceed 1"):
        GameParams(3, F(1), F(1, 2))


def test_floats_rejected():
    with pytest.raises(ValueError):
        GameParams(3, 0.5, F(2))
    with pytest.raises(ValueError):
        GameParams(3, F(1), 2.5)


def test_self_purchase_rejected():
    with pytest.raises(ValueError):
        sv({0}, set(), set())


def test_target_out_of_range_rejected():
    p = GameParams(3, F(1), F(2))
    with pytest.raises(ValueError):
        social_cost(sv({3}, set(), set()), p)


# -- graph layer ----------------------------------------------------------------------


def test_components_of_pair_plus_singletons():
    state = sv({1}, set(), set(), set())
    decomp = components(state)
    assert not decomp.connected
    assert sorted(decomp.sizes) == [1, 1, 2]
    non = decomp.nonsingleton()
    assert len(non) == 1 and non[0].vertices == frozenset({0, 1})
    assert non[0].diameter == 1 and non[0].edge_count == 1


def test_distances_on_path():
    dist = all_pairs_distances(induce_graph(PATH3))
    assert dist.distance(0, 2) == 2
    assert dist.distance(2, 0) == 2
    assert dist.distance(0, 0) == 0


def test_distance_none_across_components():
    state = sv({1}, set(), set(), set())
    dist = all_pairs_distances(induce_graph(state))
    assert dist.distance(0, 2) is None


def test_random_state_reproducible_and_valid():
    a = random_state(5, random.Random(99))
    b = random_state(5, random.Random(99))
    assert a == b
    for i, targets in enumerate(a.strategies):
        assert i not in targets
        assert all(0 <= t < 5 for t in targets)


def test_random_state_hits_full_support():
    # with 300 draws at n=3 every one of the 64 states should appear
    rng = random.Random(0)
    seen = {random_state(3, rng) for _ in range(1200)}
    assert len(seen) == 64
