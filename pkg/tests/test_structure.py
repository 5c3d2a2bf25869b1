from __future__ import annotations

import pytest
from hypothesis import given

from semi2pebbling import fixtures
from semi2pebbling.graph import Graph, bfs_distances
from semi2pebbling.structure import (
    RecognitionError,
    decompose_two_path,
    fan_decomposition_for_spine,
    internal_fan_data,
    is_semi_two_tree,
    is_two_tree,
    lies_on_some_skeleton,
    make_pleasant,
    recognize_semi_two_tree,
)

from .conftest import random_trees, small_semi_two_trees


def names(g: Graph, vs) -> set[str]:
    return {g.name(v) for v in vs}


def test_is_two_tree(fx):
    assert is_two_tree(fx["diamond"])[0]
    assert is_two_tree(fx["pyramid"])[0]
    assert not is_two_tree(fixtures.path(4))[0]
    k4 = Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert not is_two_tree(k4)[0]


def test_decompose_fig1l(fx):
    g = fx["fig1l"]
    fd = decompose_two_path(g)
    assert [g.name(v) for v in fd.spine] == ["r", "x1", "x2", "x3", "s"]
    assert [len(f.arc) for f in fd.fans] == [3, 2, 3]
    assert [f.side for f in fd.fans] == ["upper", "lower", "upper"]
    assert fd.is_pleasant()


def test_decompose_diamond_and_pyramid(fx):
    d = fx["diamond"]
    fd = decompose_two_path(d)
    assert [d.name(v) for v in fd.spine] == ["r", "m1", "s"]
    assert [names(d, f.arc) for f in fd.fans] == [{"m2"}]
    assert make_pleasant(fd) == fd
    with pytest.raises(RecognitionError):
        decompose_two_path(fx["pyramid"])


def test_make_pleasant_swaps_a_vertex_shared_by_three_fans():
    # spine x0..x4 = 0..4; w = 5 lies on the arcs of all three fans, a = 6, b = 7
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 6), (6, 5), (5, 2), (1, 6), (1, 5),
             (5, 3), (5, 7), (7, 4), (3, 7)]
    g = Graph.from_edges(8, edges)
    fd = fan_decomposition_for_spine(g, (0, 1, 2, 3, 4))
    assert [f.arc for f in fd.fans] == [(6, 5), (5,), (5, 7)]
    assert not fd.is_pleasant()
    good = make_pleasant(fd)
    assert good.is_pleasant()
    assert good.spine == (0, 1, 5, 3, 4)
    assert [f.arc for f in good.fans] == [(6,), (2,), (7,)]
    assert good.edges() == fd.edges()
    assert make_pleasant(good) == good


def test_recognize_double_diamond(fx):
    g = fx["double_diamond"]
    s = recognize_semi_two_tree(g)
    assert s.b == 2 and s.e_T == 4
    assert len(s.skeleton_edges()) == 4


def test_recognize_rejects(fx):
    with pytest.raises(RecognitionError):
        recognize_semi_two_tree(fx["pyramid"])
    with pytest.raises(RecognitionError):
        recognize_semi_two_tree(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    with pytest.raises(RecognitionError):
        recognize_semi_two_tree(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


@given(random_trees(max_n=12))
def test_tree_is_its_own_skeleton(g):
    s = recognize_semi_two_tree(g)
    assert s.b == g.n - 1 == s.e_T
    assert sorted(s.skeleton_edges()) == sorted(g.edges())


@given(small_semi_two_trees(max_n=14))
def test_skeleton_is_a_spanning_tree_of_the_diameter(g):
    s = recognize_semi_two_tree(g)
    tree, old = s.skeleton_tree
    assert tree.m == tree.n - 1
    # skeleton distances equal graph distances between skeleton vertices
    for i, v in enumerate(old):
        gd = bfs_distances(g, v).dist
        td = bfs_distances(tree, i).dist
        assert all(td[j] == gd[w] for j, w in enumerate(old))
    # simplicial vertices of G are exactly those that are simplicial in their block
    assert s.simplicial == {v for v in range(g.n) if all(a in g.adjsets[b] for a in g.adj[v] for b in g.adj[v] if a != b)}


def test_lies_on_some_skeleton(fx):
    d, sf, sx = fx["diamond"], fx["shared_fan"], fx["splitex"]
    assert lies_on_some_skeleton(recognize_semi_two_tree(d), d.vertex("m2"))
    assert not lies_on_some_skeleton(recognize_semi_two_tree(sf), sf.vertex("w"))
    assert not lies_on_some_skeleton(recognize_semi_two_tree(sx), sx.vertex("r"))


@pytest.mark.parametrize(
    "fixture, root, expected",
    [("diamond", "m1", {"m2"}), ("fig1l", "x2", {"v21", "v22"}), ("shared_fan", "x1", {"v11"})],
)
def test_internal_fan_data(fx, fixture, root, expected):
    g = fx[fixture]
    data = internal_fan_data(recognize_semi_two_tree(g), g.vertex(root))
    assert names(g, data.A_r) == expected


def test_is_semi_two_tree_on_small_graphs(fx):
    assert is_semi_two_tree(fx["fig1l"])
    assert not is_semi_two_tree(fx["fig2"])


def test_structure_json(fx):
    doc = recognize_semi_two_tree(fx["double_diamond"]).to_json()
    assert doc["b"] == 2 and len(doc["skeleton"]) == 4 and len(doc["blocks"]) == 2
