from __future__ import annotations

import pytest
from hypothesis import given

from semi2pebbling import fixtures
from semi2pebbling.graph import (
    Configuration,
    DisconnectedGraphError,
    GraphError,
    GraphFormatError,
    bfs_distances,
    blocks_and_cut_vertices,
    components,
    diameter,
    is_clique,
    parse_configuration,
    parse_graph,
    simplicial_vertices,
)

from .conftest import random_trees, small_semi_two_trees

nx = pytest.importorskip("networkx")


def test_parse_single_edge():
    g = parse_graph("2 1\n0 1")
    assert g.n == 2 and g.m == 1 and g.has_edge(0, 1)


def test_parse_diamond_matches_fixture(fx):
    g = parse_graph("4 5\n0 1\n1 2\n0 3\n3 2\n1 3")
    assert sorted(g.edges()) == sorted(fx["diamond"].edges())


@pytest.mark.parametrize(
    "text",
    [
        "3 2\n0 1\n0 1",
        "2 1\n0 0",
        "2 1\n0 5",
        "3 3\n0 1\n1 2",
        "x y\n",
        "",
        "2 1\n0 1\nlabel 0 a\nlabel 1 a",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_labels_round_trip(fx):
    g = fx["fig2"]
    assert g.vertex("z") == 3 and g.name(3) == "z"
    h = parse_graph(g.to_text())
    assert h.labels == g.labels and sorted(h.edges()) == sorted(g.edges())


def test_parse_configuration_by_label(fx):
    g = fx["fig2"]
    c = parse_configuration("# comment\nx 1\nz 3\n", g)
    assert c.counts == (0, 1, 0, 3)
    with pytest.raises(GraphFormatError):
        parse_configuration("q 1\n", g)
    with pytest.raises(GraphFormatError):
        parse_configuration("x -1\n", g)


def test_configuration_helpers():
    c = Configuration((1, 0, 2))
    assert c.size == 3 and c.plus(1).counts == (1, 1, 2)
    with pytest.raises(ValueError):
        Configuration((0, -1))


def test_bfs_path_and_diamond(fx):
    dm = bfs_distances(fixtures.path(5), 0)
    assert list(dm.dist) == [0, 1, 2, 3, 4] and dm.ecc == 4
    assert bfs_distances(fx["diamond"], 0).ecc == 2
    p = fx["pyramid"]
    assert all(bfs_distances(p, p.vertex(v)).ecc == 2 for v in "uvw")


def test_bfs_rejects_disconnected():
    from semi2pebbling.graph import Graph

    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(DisconnectedGraphError):
        bfs_distances(g, 0)


def test_blocks_of_path_and_fixtures(fx):
    bs = blocks_and_cut_vertices(fixtures.path(5))
    assert len(bs.blocks) == 4 and bs.cut_vertices == {1, 2, 3}
    dd = blocks_and_cut_vertices(fx["double_diamond"])
    assert len(dd.blocks) == 2 and dd.cut_vertices == {fx["double_diamond"].vertex("c")}
    f2 = fx["fig2"]
    b = blocks_and_cut_vertices(f2)
    names = {frozenset(f2.name(v) for v in blk) for blk in b.blocks}
    assert names == {frozenset("zy"), frozenset("yxr")}
    assert b.cut_vertices == {f2.vertex("y")}


def test_simplicial_vertices(fx):
    d = fx["diamond"]
    assert simplicial_vertices(d) == {d.vertex("r"), d.vertex("s")}
    assert simplicial_vertices(fixtures.path(2)) == {0, 1}
    p = fx["pyramid"]
    assert simplicial_vertices(p) == {p.vertex(v) for v in "uvw"}


@given(small_semi_two_trees(max_n=12))
def test_blocks_agree_with_networkx(g):
    ng = nx.Graph(list(g.edges()))
    bs = blocks_and_cut_vertices(g)
    assert {frozenset(b) for b in bs.blocks} == {frozenset(b) for b in nx.biconnected_components(ng)}
    assert set(bs.cut_vertices) == set(nx.articulation_points(ng))
    # every edge in exactly one block
    for u, v in g.edges():
        assert sum(1 for b in bs.blocks if u in b and v in b) == 1


@given(random_trees(max_n=12))
def test_distances_and_diameter_agree_with_networkx(g):
    ng = nx.Graph(list(g.edges()))
    lengths = dict(nx.all_pairs_shortest_path_length(ng))
    for v in range(g.n):
        assert list(bfs_distances(g, v).dist) == [lengths[v][u] for u in range(g.n)]
    assert diameter(g) == nx.diameter(ng)


@given(small_semi_two_trees(max_n=10))
def test_simplicial_matches_definition(g):
    expected = {v for v in range(g.n) if is_clique(g, g.adj[v])}
    assert simplicial_vertices(g) == expected


def test_components_and_vertex_errors(fx):
    g = fx["fig2"]
    assert sorted(map(sorted, components(g, [g.vertex("y")]))) == [[0, 1], [3]]
    with pytest.raises(GraphError):
        g.vertex("nope")
