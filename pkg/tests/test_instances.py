from __future__ import annotations

import time

import pytest
from hypothesis import given, strategies as st

from semi2pebbling.graph import Graph
from semi2pebbling.instances import (
    IsoSet,
    InstanceError,
    InstanceSpec,
    connected_graphs_brute_force,
    enumerate_semi_two_trees,
    enumerate_trees,
    enumerate_two_paths,
    isomorphic,
    random_semi_two_tree,
)
from semi2pebbling.structure import is_semi_two_tree, recognize_semi_two_tree

nx = pytest.importorskip("networkx")


def as_nx(g: Graph):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_tiny_enumerations():
    two = enumerate_semi_two_trees(2)
    assert len(two) == 1 and two[0].m == 1
    three = enumerate_semi_two_trees(3)
    assert sorted((g.n, g.m) for g in three) == [(2, 1), (3, 2)]


def test_four_vertex_members():
    four = [as_nx(g) for g in enumerate_semi_two_trees(4, n_min=4)]
    wanted = {
        "P4": nx.path_graph(4),
        "STAR3": nx.star_graph(3),
        "DIAMOND": nx.Graph([(0, 1), (1, 2), (0, 3), (3, 2), (1, 3)]),
    }
    for name, h in wanted.items():
        assert any(nx.is_isomorphic(h, g) for g in four), name
    for h in (nx.complete_graph(4), nx.cycle_graph(4)):
        assert not any(nx.is_isomorphic(h, g) for g in four)


# class sizes per vertex count, frozen after filtering the networkx graph atlas
# (every graph on at most 7 vertices) through the recogniser
COUNTS = {2: 1, 3: 1, 4: 3, 5: 5, 6: 12, 7: 26}


def test_enumeration_counts_are_stable():
    got = {}
    for g in enumerate_semi_two_trees(7):
        got[g.n] = got.get(g.n, 0) + 1
    assert got == COUNTS


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_enumeration_is_complete_against_brute_force(n):
    seen = IsoSet()
    for g in connected_graphs_brute_force(n):
        if is_semi_two_tree(g):
            seen.add(g)
    ours = enumerate_semi_two_trees(n, n_min=n)
    assert len(seen) == len(ours) == COUNTS[n]
    for g in seen.items:
        assert sum(nx.is_isomorphic(as_nx(g), as_nx(h)) for h in ours) == 1


def test_enumeration_matches_the_graph_atlas():
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() >= 2 and nx.is_connected(h)]
    accepted = [
        h for h in atlas if is_semi_two_tree(Graph.from_edges(h.number_of_nodes(), list(h.edges())))
    ]
    ours = [as_nx(g) for g in enumerate_semi_two_trees(7)]
    assert len(accepted) == len(ours)
    for h in accepted:
        assert sum(nx.is_isomorphic(h, g) for g in ours) == 1


def test_enumerated_classes_are_pairwise_distinct():
    graphs = enumerate_semi_two_trees(7)
    for i, g in enumerate(graphs):
        for h in graphs[i + 1 :]:
            if g.n == h.n and g.m == h.m:
                assert not nx.is_isomorphic(as_nx(g), as_nx(h))


def test_trees_and_two_paths():
    # unlabelled trees on 2..8 vertices: 1, 1, 2, 3, 6, 11, 23
    assert len(enumerate_trees(8)) == 1 + 1 + 2 + 3 + 6 + 11 + 23
    for g in enumerate_two_paths(8):
        assert recognize_semi_two_tree(g).b == 1


def test_enumeration_guard():
    with pytest.raises(InstanceError):
        enumerate_semi_two_trees(10)


@given(st.integers(2, 40), st.integers(0, 2**64 - 1))
def test_generated_instances_are_accepted(n, seed):
    for kind in ("semi_two_tree", "tree"):
        g = random_semi_two_tree(InstanceSpec(kind=kind, n=n, seed=seed))
        assert g.n == n
        s = recognize_semi_two_tree(g)
        if kind == "tree":
            assert g.m == n - 1


@given(st.sampled_from([2, 4, 5, 9, 20]), st.integers(0, 1000))
def test_two_path_kind(n, seed):
    g = random_semi_two_tree(InstanceSpec(kind="two_path", n=n, seed=seed))
    assert recognize_semi_two_tree(g).b == 1


def test_generation_is_deterministic():
    a = random_semi_two_tree(InstanceSpec(n=50, seed=3))
    b = random_semi_two_tree(InstanceSpec(n=50, seed=3))
    assert sorted(a.edges()) == sorted(b.edges())


def test_requested_block_count():
    g = random_semi_two_tree(InstanceSpec(n=7, seed=1, blocks=2))
    assert g.n == 7 and recognize_semi_two_tree(g).b == 2


def test_generator_errors():
    with pytest.raises(InstanceError):
        random_semi_two_tree(InstanceSpec(n=1))
    with pytest.raises(InstanceError):
        random_semi_two_tree(InstanceSpec(kind="two_path", n=3))
    with pytest.raises(InstanceError):
        random_semi_two_tree(InstanceSpec(n=5, blocks=9))


def test_large_generation_is_fast():
    start = time.perf_counter()
    g = random_semi_two_tree(InstanceSpec(n=10**5, seed=7))
    assert time.perf_counter() - start < 1.0
    assert recognize_semi_two_tree(g).n == 10**5


def test_isomorphism_helper():
    a = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    b = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    c = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert isomorphic(a, b) and not isomorphic(a, c)
