from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from semi2pebbling import fixtures
from semi2pebbling.graph import Configuration, bfs_distances
from semi2pebbling.oracle import (
    BudgetExceeded,
    Solver,
    UnsolvableError,
    exact_pebbling_number,
    is_solvable,
    max_unsolvable_configuration,
    min_cost_solution,
    verify_trace,
    weight,
)

from .conftest import random_counts, small_semi_two_trees

P5 = fixtures.path(5)
STAR3 = fixtures.star(3)


def conf(*counts):
    return Configuration(tuple(counts))


def test_pyramid_blocks_the_third_corner(fx):
    p = fx["pyramid"]
    u, v, w = (p.vertex(x) for x in "uvw")
    c = Configuration.from_mapping(p.n, {u: 3, v: 3})
    assert not is_solvable(p, c, w).solvable


def test_root_already_covered(fx):
    g = fx["diamond"]
    verdict = is_solvable(g, conf(0, 0, 0, 0).plus(0, 2), 0, 2)
    assert verdict.solvable and verdict.trace.steps == ()


def test_path_chain():
    verdict = is_solvable(P5, conf(0, 0, 0, 0, 16), 0)
    assert verdict.solvable and verdict.trace.cost == 16
    assert not is_solvable(P5, conf(0, 0, 0, 0, 15), 0).solvable


def test_weight_examples(fx):
    assert weight(conf(1, 0, 0, 0, 0), 0, bfs_distances(P5, 0)) == 1
    assert weight(conf(0, 0, 0, 0, 16), 0, bfs_distances(P5, 0)) == 1
    d = fx["diamond"]
    dm = bfs_distances(d, 0)
    # one pebble on m2 (distance 1) and three on s (distance 2)
    c = Configuration.from_mapping(d.n, {d.vertex("m2"): 1, d.vertex("s"): 3})
    assert weight(c, 0, dm) == Fraction(5, 4)
    # two moves s -> m2 -> r reach the root, so this one is solvable
    assert is_solvable(d, c, 0).solvable
    # weight at least 1 is necessary but not sufficient
    p = fx["pyramid"]
    blocked = Configuration.from_mapping(p.n, {p.vertex("u"): 3, p.vertex("v"): 3})
    assert weight(blocked, p.vertex("w"), bfs_distances(p, p.vertex("w"))) == Fraction(3, 2)
    assert not is_solvable(p, blocked, p.vertex("w")).solvable
    with pytest.raises(ValueError):
        weight(c, 0, bfs_distances(d, 1))


def test_exact_values(fx):
    assert exact_pebbling_number(fixtures.path(4), 0) == 8
    assert exact_pebbling_number(STAR3, 1) == 5
    assert exact_pebbling_number(STAR3, 1, 2) == 9
    assert exact_pebbling_number(fx["diamond"], 0) == 4
    fig2 = fx["fig2"]
    assert exact_pebbling_number(fig2, fig2.vertex("r")) == 5
    c = max_unsolvable_configuration(fig2, fig2.vertex("r"))
    assert c.size == 4


def test_fig2_certificate(fx):
    g = fx["fig2"]
    r = g.vertex("r")
    c = conf(0, 1, 0, 3)
    assert not is_solvable(g, c, r).solvable
    assert all(is_solvable(g, c.plus(v), r).solvable for v in range(g.n))


def test_min_cost_solution(fx):
    assert min_cost_solution(fixtures.path(3), conf(0, 0, 4), 0).cost == 4
    with pytest.raises(UnsolvableError):
        min_cost_solution(fixtures.path(3), conf(0, 0, 3), 0)


def test_min_cost_on_diamond_size_q(fx):
    d = fx["diamond"]
    from itertools import combinations_with_replacement

    for combo in combinations_with_replacement(range(d.n), 5):
        counts = [0] * d.n
        for v in combo:
            counts[v] += 1
        trace = min_cost_solution(d, Configuration(tuple(counts)), 0)
        assert trace.cost <= 4
        assert verify_trace(d, Configuration(tuple(counts)), 0, trace).acyclic


def test_verify_trace_diagnostics():
    c = conf(0, 0, 0, 0, 16)
    chain = [(4, 3)] * 8 + [(3, 2)] * 4 + [(2, 1)] * 2 + [(1, 0)]
    check = verify_trace(P5, c, 0, chain)
    assert check.valid and check.acyclic and check.greedy and check.cost == 16
    back_and_forth = [(4, 3), (4, 3), (3, 4), (4, 3)] + [(4, 3)] * 4
    check = verify_trace(P5, c, 0, back_and_forth)
    assert not check.acyclic and not check.greedy
    check = verify_trace(P5, conf(0, 0, 0, 0, 3), 0, [(4, 3), (4, 3)])
    assert not check.valid and check.failing_step == 1
    assert not verify_trace(P5, c, 0, [(4, 2)]).valid


def test_budget_is_a_hard_error(fx):
    p = fx["pyramid"]
    c = Configuration.from_mapping(p.n, {p.vertex("u"): 3, p.vertex("v"): 3})
    with pytest.raises(BudgetExceeded):
        is_solvable(p, c, p.vertex("w"), state_budget=1)
    with pytest.raises(BudgetExceeded):
        exact_pebbling_number(fixtures.path(6), 0, total_budget=10)


@given(small_semi_two_trees(max_n=7), st.integers(0, 2**32 - 1))
def test_traces_replay_and_are_acyclic(g, seed):
    rng = random.Random(seed)
    r = rng.randrange(g.n)
    dm = bfs_distances(g, r)
    for _ in range(5):
        c = Configuration(tuple(random_counts(rng, g.n, rng.randint(0, 2 ** dm.ecc + g.n))))
        verdict = is_solvable(g, c, r)
        if not verdict.solvable:
            continue
        check = verify_trace(g, c, r, verdict.trace)
        assert check.valid
        # every step changes weight by -2/2^d(u) + 1/2^d(v); never an increase
        w = weight(c, r, dm)
        counts = list(c.counts)
        for u, v in verdict.trace.steps:
            counts[u] -= 2
            counts[v] += 1
            w2 = weight(Configuration(tuple(counts)), r, dm)
            assert w2 <= w
            assert (w2 == w) == (dm.dist[v] < dm.dist[u])
            w = w2
        best = min_cost_solution(g, c, r)
        assert verify_trace(g, c, r, best).acyclic


@given(small_semi_two_trees(max_n=6), st.integers(0, 2**32 - 1))
def test_solver_is_monotone_in_pebbles(g, seed):
    rng = random.Random(seed)
    r = rng.randrange(g.n)
    solver = Solver(g, r, 1)
    for _ in range(10):
        counts = random_counts(rng, g.n, rng.randint(0, 12))
        if solver.solvable(counts):
            v = rng.randrange(g.n)
            counts[v] += 1
            assert solver.solvable(counts)


def test_t_slope_of_exact_numbers(fx):
    for name in ("diamond", "double_diamond"):
        g = fx[name]
        for r in range(g.n):
            ecc = bfs_distances(g, r).ecc
            assert exact_pebbling_number(g, r, 2) - exact_pebbling_number(g, r, 1) == 2**ecc
