"""Pebbling on trees: maximum root path partitions and the exact formula.

For a tree rooted at ``r`` the partition is built greedily: repeatedly take a
longest path that starts at an already covered vertex and uses only
uncovered edges.  With lengths ``a_1 >= ... >= a_k`` the t-fold pebbling
number is ``t*2**a_1 + sum(2**a_i for i >= 2) - k + 1``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Literal, Sequence

from .graph import Configuration, Graph, GraphError, bfs_distances

TieRule = Literal["smallest", "largest"]


class NotATreeError(GraphError):
    pass


@dataclass(frozen=True)
class PathPartition:
    root: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.paths)

    @property
    def k(self) -> int:
        return len(self.paths)

    def to_json(self) -> list[dict]:
        return [{"path": list(p), "length": len(p) - 1} for p in self.paths]


@dataclass(frozen=True)
class InterRootBound:
    """Quantities comparing a root ``r`` with a diametral leaf ``r_star``.

    ``h_prime`` is the number of edges the ``r``-to-``r_star`` path shares
    with the diametral path from ``r_star`` to ``s_star``; ``h_bar`` is the
    rest of that diametral path.
    """

    d: int
    ecc_r: int
    h_prime: int
    h_bar: int

    def upper_bound(self, pi_star: int, t: int) -> int:
        return pi_star - t * (2**self.d - 2**self.ecc_r) + 2**self.h_bar - 1


def check_tree(g: Graph) -> None:
    if g.m != g.n - 1:
        raise NotATreeError(f"{g.n} vertices but {g.m} edges")
    bfs_distances(g, 0)


def rooted_parents(g: Graph, r: int) -> tuple[list[int], list[int]]:
    """Parent array and a BFS order for the tree ``g`` hung from ``r``."""
    parent = [-1] * g.n
    parent[r] = r
    order = [r]
    for u in order:
        for v in g.adj[u]:
            if parent[v] < 0:
                parent[v] = u
                order.append(v)
    parent[r] = -1
    return parent, order


def tree_path(g: Graph, u: int, v: int) -> list[int]:
    parent, _ = rooted_parents(g, u)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def max_path_partition(g: Graph, r: int, rule: TieRule = "smallest") -> PathPartition:
    """Maximum ``r``-path partition, with deterministic tie-breaking.

    Among longest candidate paths the one whose far endpoint has the
    smallest id is taken (``rule="largest"`` flips this).  Every candidate
    starts at a covered vertex and descends into one uncovered child subtree,
    so distinct candidates always end at distinct leaves and the rule is a
    total order.
    """
    check_tree(g)
    if g.n == 1:
        return PathPartition(r, ())
    sign = 1 if rule == "smallest" else -1
    parent, order = rooted_parents(g, r)
    height = [0] * g.n
    leaf = list(range(g.n))
    for v in reversed(order):
        p = parent[v]
        if p < 0:
            continue
        h = height[v] + 1
        if h > height[p] or (h == height[p] and sign * leaf[v] < sign * leaf[p]):
            height[p] = h
            leaf[p] = leaf[v]
    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    heap: list[tuple[int, int, int, int]] = []

    def push(top: int, child: int) -> None:
        heapq.heappush(heap, (-(height[child] + 1), sign * leaf[child], top, child))

    for c in children[r]:
        push(r, c)
    paths = []
    while heap:
        _, _, top, child = heapq.heappop(heap)
        path = [top]
        u = child
        target = leaf[child]
        while True:
            path.append(u)
            if u == target:
                break
            nxt = None
            for c in children[u]:
                if leaf[c] == target:
                    nxt = c
                else:
                    push(u, c)
            u = nxt
        for c in children[u]:
            push(u, c)
        paths.append(tuple(path))
    return PathPartition(r, tuple(paths))


def formula_value(lengths: Sequence[int], t: int) -> int:
    if not lengths:
        return t
    return t * 2 ** lengths[0] + sum(2**a for a in lengths[1:]) - len(lengths) + 1


def tree_pebbling_number(g: Graph, r: int, t: int = 1) -> int:
    if t < 1:
        raise ValueError("t must be at least 1")
    return formula_value(max_path_partition(g, r).lengths, t)


def tree_extremal_config(g: Graph, r: int, t: int = 1) -> Configuration:
    """Zero everywhere except ``2**a_i - 1`` on each path's far end (``t*2**a_1 - 1`` on the first)."""
    part = max_path_partition(g, r)
    counts = [0] * g.n
    for i, path in enumerate(part.paths):
        a = len(path) - 1
        counts[path[-1]] = (t if i == 0 else 1) * 2**a - 1
    return Configuration(tuple(counts))


def path_lengths_fast(
    n: int, adj: Sequence[Sequence[int]], r: int, size: int | None = None
) -> dict[int, int]:
    """Multiset of partition path lengths as ``{length: count}``, in linear time.

    Each vertex keeps its tallest child subtree on its own path; every other
    child subtree starts a new path whose length is one more than its height.
    ``adj`` may index a larger id space than the tree; ``size`` is then the
    number of tree vertices (all ``n`` by default).
    """
    parent = [-1] * n
    parent[r] = r
    order = [r]
    for u in order:
        for v in adj[u]:
            if parent[v] < 0:
                parent[v] = u
                order.append(v)
    if len(order) != (n if size is None else size):
        raise NotATreeError("tree is disconnected")
    height = [0] * n
    best_child_h = [-1] * n
    counts: dict[int, int] = {}
    for v in reversed(order):
        if v == r:
            break
        p = parent[v]
        h = height[v] + 1
        prev = best_child_h[p]
        if h > prev:
            if prev >= 0:
                counts[prev] = counts.get(prev, 0) + 1
            best_child_h[p] = h
            height[p] = h
        else:
            counts[h] = counts.get(h, 0) + 1
    if height[r] > 0:
        counts[height[r]] = counts.get(height[r], 0) + 1
    return counts


def formula_from_counts(counts: dict[int, int], t: int) -> int:
    if not counts:
        return t
    a1 = max(counts)
    total = t * (1 << a1)
    k = 0
    for a, c in counts.items():
        k += c
        total += c * (1 << a)
    total -= 1 << a1
    return total - k + 1


def tree_pebbling_number_fast(g: Graph, r: int, t: int = 1) -> int:
    return formula_from_counts(path_lengths_fast(g.n, g.adj, r), t)


def inter_root_bound(g: Graph, r: int, r_star: int, s_star: int) -> InterRootBound:
    """Split of the diametral path ``r_star..s_star`` as seen from ``r``."""
    d = bfs_distances(g, r_star).dist[s_star]
    ecc_r = bfs_distances(g, r).ecc
    diam_path = tree_path(g, r_star, s_star)
    to_root = set(tree_path(g, r, r_star))
    shared = sum(1 for v in diam_path if v in to_root) - 1
    return InterRootBound(d, ecc_r, shared, d - shared)


def subdivide(g: Graph, x: int, y: int) -> tuple[Graph, int]:
    """Replace edge ``xy`` by a path ``x r y``; the new vertex ``r`` gets id ``n``."""
    if not g.has_edge(x, y):
        raise GraphError(f"no edge ({x}, {y})")
    r = g.n
    edges = [e for e in g.edges() if set(e) != {x, y}] + [(x, r), (r, y)]
    return Graph.from_edges(g.n + 1, edges), r


def branch_eccentricity(g: Graph, x: int, y: int) -> int:
    """Eccentricity of ``x`` in the component of ``g - y`` containing ``x``."""
    sub, old = g.without_vertices([y])
    return bfs_distances_component(sub, old.index(x))


def bfs_distances_component(g: Graph, source: int) -> int:
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return max(dist.values())


def peripheral_root_lengths(
    n: int, adj: Sequence[Sequence[int]], start: int
) -> tuple[int, int, dict[int, int]]:
    """Smallest-id vertex of maximum eccentricity, the diameter, and its path lengths.

    One breadth-first search from ``start`` lays the tree out in BFS
    positions; every later pass is a sweep over those positions.  Downward
    heights give the eccentricity of each vertex after an upward sweep, and
    the partition rooted at the chosen vertex ``r*`` differs from the one
    rooted at ``start`` only along the path between them, so it is read off
    the same arrays.  ``adj`` may index a larger id space than the tree.
    """
    seen = bytearray(n)
    seen[start] = 1
    order = [start]
    par = [-1]
    i = 0
    while i < len(order):
        for v in adj[order[i]]:
            if not seen[v]:
                seen[v] = 1
                order.append(v)
                par.append(i)
        i += 1
    size = len(order)
    h1 = [0] * size
    h2 = [0] * size
    best = [-1] * size
    for p in range(size - 1, 0, -1):
        q = par[p]
        length = h1[p] + 1
        if length > h1[q]:
            h2[q] = h1[q]
            h1[q] = length
            best[q] = p
        elif length > h2[q]:
            h2[q] = length
    up = [0] * size
    for p in range(1, size):
        q = par[p]
        side = h2[q] if best[q] == p else h1[q]
        up[p] = 1 + (up[q] if up[q] > side else side)
    ecc = [a if a > b else b for a, b in zip(h1, up)]
    diam = max(ecc)
    r_pos = min((p for p in range(size) if ecc[p] == diam), key=order.__getitem__)

    on_path = bytearray(size)
    path = []
    p = r_pos
    while p >= 0:
        on_path[p] = 1
        path.append(p)
        p = par[p]
    counts: dict[int, int] = {}
    extra: dict[int, list[int]] = {}
    for p in range(1, size):
        q = par[p]
        if on_path[q]:
            if not on_path[p]:
                extra.setdefault(q, []).append(h1[p] + 1)
        elif p != best[q]:
            length = h1[p] + 1
            counts[length] = counts.get(length, 0) + 1
    for p in path:
        branches = extra.get(p, [])
        if p != 0:
            branches.append(up[p])
        if p != r_pos and branches:
            branches.remove(max(branches))
        for length in branches:
            counts[length] = counts.get(length, 0) + 1
    return order[r_pos], diam, counts
