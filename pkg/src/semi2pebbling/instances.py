"""Instance corpus: exhaustive small semi-2-trees and seeded random ones.

Small instances are grown one vertex at a time inside the class of graphs
whose blocks are edges or 2-trees (triangle blocks included, since a
semi-2-tree can have such a graph as a one-vertex-smaller subgraph).  A new
vertex is either a leaf or a degree-2 vertex on both ends of an existing
edge; every graph of the class arises this way.  Isomorphic copies are
merged, and the recogniser picks out the semi-2-trees.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Literal

from .graph import Graph
from .structure import is_semi_two_tree, recognize_semi_two_tree

Kind = Literal["two_path", "semi_two_tree", "tree"]
ENUMERATION_LIMIT = 9


class InstanceError(ValueError):
    pass


# -- isomorphism -----------------------------------------------------------


def _refine(g: Graph) -> list[int]:
    """Stable colouring by iterated neighbourhood signatures (colour refinement)."""
    colour = [len(a) for a in g.adj]
    while True:
        sigs = [(colour[v], tuple(sorted(colour[u] for u in g.adj[v]))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def invariant(g: Graph) -> tuple:
    """Isomorphism invariant: sizes plus the sorted refined colour signatures."""
    colour = _refine(g)
    sig = sorted((colour[v], tuple(sorted(colour[u] for u in g.adj[v]))) for v in range(g.n))
    return (g.n, g.m, tuple(sig))


def isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with colour-refinement pruning."""
    if g.n != h.n or g.m != h.m:
        return False
    cg, ch = _refine_pair(g, h)
    if cg is None:
        return False
    order = sorted(range(g.n), key=lambda v: (sum(1 for u in range(g.n) if cg[u] == cg[v]), v))
    mapping: dict[int, int] = {}
    used: set[int] = set()
    gs, hs = g.adjsets, h.adjsets

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(h.n):
            if w in used or ch[w] != cg[v]:
                continue
            if all((u in gs[v]) == (mapping[u] in hs[w]) for u in mapping):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)


def _refine_pair(g: Graph, h: Graph) -> tuple[list[int] | None, list[int] | None]:
    """Refine the disjoint union so that colours are comparable across graphs."""
    n = g.n
    edges = list(g.edges()) + [(u + n, v + n) for u, v in h.edges()]
    union = Graph.from_edges(2 * n, edges, check=False)
    colour = _refine(union)
    cg, ch = colour[:n], colour[n:]
    if sorted(cg) != sorted(ch):
        return None, None
    return cg, ch


class IsoSet:
    """Collects graphs up to isomorphism, keeping the first representative."""

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[Graph]] = {}
        self.items: list[Graph] = []

    def add(self, g: Graph) -> bool:
        key = invariant(g)
        bucket = self._buckets.setdefault(key, [])
        for h in bucket:
            if isomorphic(g, h):
                return False
        bucket.append(g)
        self.items.append(g)
        return True

    def __len__(self) -> int:
        return len(self.items)


# -- exhaustive enumeration ------------------------------------------------


def _children(g: Graph) -> Iterator[Graph]:
    n = g.n
    base = list(g.edges())
    for v in range(n):
        yield Graph.from_edges(n + 1, base + [(v, n)], check=False)
    for u, v in base:
        yield Graph.from_edges(n + 1, base + [(u, n), (v, n)], check=False)


@lru_cache(maxsize=None)
def _block_two_tree_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices whose blocks are edges or 2-trees, up to isomorphism."""
    if n == 1:
        return (Graph(1, ((),)),)
    seen = IsoSet()
    for g in _block_two_tree_graphs(n - 1):
        for h in _children(g):
            seen.add(h)
    return tuple(seen.items)


def enumerate_semi_two_trees(n_max: int, n_min: int = 2) -> list[Graph]:
    """Every semi-2-tree with ``n_min <= n <= n_max`` vertices, one per isomorphism class."""
    if n_max > ENUMERATION_LIMIT:
        raise InstanceError(f"enumeration is limited to n <= {ENUMERATION_LIMIT}")
    out = []
    for n in range(max(n_min, 2), n_max + 1):
        out.extend(g for g in _block_two_tree_graphs(n) if is_semi_two_tree(g))
    return out


def enumerate_two_paths(n_max: int, n_min: int = 2) -> list[Graph]:
    return [g for g in enumerate_semi_two_trees(n_max, n_min) if recognize_semi_two_tree(g).b == 1]


def enumerate_trees(n_max: int, n_min: int = 2) -> list[Graph]:
    return [g for g in enumerate_semi_two_trees(n_max, n_min) if g.m == g.n - 1]


def connected_graphs_brute_force(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on ``n`` vertices (only sensible for n <= 6)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = Graph.from_edges(n, edges, check=False)
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) == n:
            yield g


# -- random generation -----------------------------------------------------


@dataclass(frozen=True)
class InstanceSpec:
    kind: Kind = "semi_two_tree"
    n: int = 10
    seed: int = 0
    blocks: int | None = None
    max_block: int = 12
    edge_block_prob: float = 0.3


def random_two_path_edges(k: int, rng: random.Random, start: int = 0) -> tuple[list[tuple[int, int]], tuple[int, int]]:
    """Edges of a random 2-path on ``k >= 4`` vertices numbered from ``start``.

    Vertices are added along a strip of triangles: each new vertex is joined
    to the newest vertex and to one of the other two corners of the newest
    triangle, never to the edge opposite the newest vertex, so the strip never
    branches.  Returns the edges and the two simplicial vertices.
    """
    if k < 4:
        raise InstanceError("a 2-path with a fan needs at least 4 vertices")
    a, b, c = start, start + 1, start + 2
    edges = [(a, b), (a, c), (b, c)]
    tri = (a, b, c)
    for v in range(start + 3, start + k):
        newest = tri[2]
        other = tri[rng.randrange(2)]
        edges += [(newest, v), (other, v)]
        tri = (other, newest, v)
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    ends = [v for v in range(start, start + k) if deg[v] == 2]
    if len(ends) != 2:
        raise AssertionError("strip generation produced a branching 2-tree")
    return edges, (ends[0], ends[1])


def _block_sizes(n: int, spec: InstanceSpec, rng: random.Random) -> list[int]:
    """Block sizes (vertex counts) whose overlaps give exactly ``n`` vertices."""
    remaining = n - 1
    sizes: list[int] = []
    if spec.kind == "tree":
        return [2] * remaining
    if spec.kind == "two_path":
        if n == 2:
            return [2]
        if n < 4:
            raise InstanceError("no 2-path has exactly 3 vertices")
        return [n]
    if spec.blocks is not None:
        if not 1 <= spec.blocks <= remaining:
            raise InstanceError("block count must be between 1 and n - 1")
        sizes = _split_exact(remaining, spec.blocks, rng)
        return [s + 1 for s in sizes]
    while remaining > 0:
        if remaining < 3 or rng.random() < spec.edge_block_prob:
            sizes.append(2)
            remaining -= 1
            continue
        top = min(spec.max_block, remaining + 1)
        size = rng.randint(4, top) if top >= 4 else 2
        if remaining - (size - 1) == 2:
            size -= 1 if size > 4 else 0
        sizes.append(size)
        remaining -= size - 1
    return sizes


def _split_exact(total: int, parts: int, rng: random.Random) -> list[int]:
    """``parts`` summands of ``total``, each 1 or at least 3 (a block never has 3 vertices)."""
    for _ in range(1000):
        cuts = sorted(rng.sample(range(1, total), parts - 1)) if parts > 1 else []
        pieces = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        if all(p == 1 or p >= 3 for p in pieces):
            return pieces
    pieces = [1] * (parts - 1) + [total - parts + 1]
    if pieces[-1] == 2:
        raise InstanceError("cannot realise this block count without a triangle block")
    return pieces


def random_semi_two_tree(spec: InstanceSpec) -> Graph:
    """A random semi-2-tree with exactly ``spec.n`` vertices, reproducible from the seed.

    Blocks are glued one at a time; a new block is attached through one of
    its simplicial ends to a vertex that is already an end of some block, so
    cut vertices stay simplicial in every block.
    """
    if spec.n < 2:
        raise InstanceError("need at least 2 vertices")
    rng = random.Random(spec.seed)
    sizes = _block_sizes(spec.n, spec, rng)
    edges: list[tuple[int, int]] = []
    anchors = [0]
    nxt = 1
    for size in sizes:
        at = anchors[rng.randrange(len(anchors))]
        if size == 2:
            edges.append((at, nxt))
            anchors.append(nxt)
            nxt += 1
            continue
        local, (e1, e2) = random_two_path_edges(size, rng, start=0)
        glue = e1 if rng.random() < 0.5 else e2
        other = e2 if glue == e1 else e1
        ids = {}
        for v in range(size):
            if v == glue:
                ids[v] = at
            else:
                ids[v] = nxt
                nxt += 1
        edges.extend((ids[u], ids[v]) for u, v in local)
        anchors.append(ids[other])
    assert nxt == spec.n
    perm = list(range(spec.n))
    rng.shuffle(perm)
    return Graph.from_edges(spec.n, [(perm[u], perm[v]) for u, v in edges], check=False)
