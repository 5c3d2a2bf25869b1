"""Recognition of 2-paths and semi-2-trees, with explicit fan decompositions.

A 2-path of diameter ``d >= 2`` is described along a shortest path
``x_0 .. x_d`` between its two simplicial vertices (the spine).  Each
internal spine vertex ``x_i`` is the centre of a fan whose arc is the path
of non-spine neighbours of ``x_i`` running from ``x_{i-1}`` to ``x_{i+1}``.
Consecutive fans either share exactly one arc vertex (same side) or none
(opposite sides).

A semi-2-tree is a connected graph whose blocks are 2-paths (a single edge
counts) and whose cut vertices are simplicial in every block containing
them.  Its skeleton is the union of the block spines.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Literal, Sequence

from .graph import (
    BlockStructure,
    Graph,
    GraphError,
    blocks_and_cut_vertices,
    bfs_distances,
    components,
    is_simplicial,
)

Side = Literal["upper", "lower"]


class RecognitionError(GraphError):
    """The graph is not of the requested class; the message names the culprit."""


@dataclass(frozen=True)
class Fan:
    center: int
    arc: tuple[int, ...]
    side: Side

    @property
    def k(self) -> int:
        return len(self.arc)

    def to_json(self) -> dict:
        return {"center": self.center, "arc": list(self.arc), "side": self.side}


@dataclass(frozen=True)
class FanDecomposition:
    """Spine ``x_0..x_d`` and the fans ``F_1..F_{d-1}`` (``fans[i-1]`` is centred on ``x_i``)."""

    spine: tuple[int, ...]
    fans: tuple[Fan, ...]

    @property
    def d(self) -> int:
        return len(self.spine) - 1

    def fan_at(self, i: int) -> Fan:
        return self.fans[i - 1]

    def arc_set(self, i: int) -> frozenset[int]:
        if 1 <= i <= self.d - 1:
            return frozenset(self.fans[i - 1].arc)
        return frozenset()

    def is_pleasant(self) -> bool:
        return all(not (self.arc_set(i - 1) & self.arc_set(i + 1)) for i in range(2, self.d - 1))

    def fans_containing(self, v: int) -> list[int]:
        """Indices ``i`` with ``v`` in the arc of ``F_i``."""
        return [i for i in range(1, self.d) if v in self.fans[i - 1].arc]

    def vertices(self) -> set[int]:
        vs = set(self.spine)
        for f in self.fans:
            vs.update(f.arc)
        return vs

    def edges(self) -> set[tuple[int, int]]:
        out = {_edge(a, b) for a, b in zip(self.spine, self.spine[1:])}
        for i, f in enumerate(self.fans, start=1):
            q = (self.spine[i - 1],) + f.arc + (self.spine[i + 1],)
            out.update(_edge(a, b) for a, b in zip(q, q[1:]))
            out.update(_edge(f.center, v) for v in f.arc)
        return out

    def relabel(self, old: Sequence[int]) -> "FanDecomposition":
        return FanDecomposition(
            tuple(old[v] for v in self.spine),
            tuple(Fan(old[f.center], tuple(old[v] for v in f.arc), f.side) for f in self.fans),
        )

    def to_json(self) -> dict:
        return {"spine": list(self.spine), "fans": [f.to_json() for f in self.fans]}


@dataclass(frozen=True)
class InternalFanData:
    root: int
    index: int
    A_r: frozenset[int]
    e_r: tuple[int, int] | None


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def is_two_tree(g: Graph) -> tuple[bool, list[int]]:
    """Peel 2-simplicial vertices; success iff the graph shrinks to ``K_2``.

    Returns the removal order on success (empty for ``K_2`` itself).
    """
    n = g.n
    if n < 2:
        return False, []
    if g.m != 2 * n - 3:
        return False, []
    alive = [True] * n
    deg = [len(a) for a in g.adj]
    sets = g.adjsets
    order: list[int] = []
    queue = deque(v for v in range(n) if deg[v] == 2)
    left = n
    while queue and left > 2:
        v = queue.popleft()
        if not alive[v] or deg[v] != 2:
            continue
        a, b = (u for u in g.adj[v] if alive[u])
        if b not in sets[a]:
            continue
        alive[v] = False
        left -= 1
        order.append(v)
        for u in (a, b):
            deg[u] -= 1
            if deg[u] == 2:
                queue.append(u)
    if left != 2:
        return False, []
    a, b = (v for v in range(n) if alive[v])
    if b not in sets[a]:
        return False, []
    return True, order


def lex_shortest_path(g: Graph, src: int, dst: int, allowed: set[int] | None = None) -> list[int]:
    """Lexicographically smallest shortest ``src``-``dst`` path."""
    dist = {dst: 0}
    queue = deque([dst])
    while queue:
        u = queue.popleft()
        if u == src:
            break
        for v in g.adj[u]:
            if v not in dist and (allowed is None or v in allowed):
                dist[v] = dist[u] + 1
                queue.append(v)
    if src not in dist:
        raise GraphError(f"no path from {src} to {dst}")
    path = [src]
    while path[-1] != dst:
        u = path[-1]
        path.append(min(v for v in g.adj[u] if dist.get(v, -1) == dist[u] - 1))
    return path


def _arc(g: Graph, spine: Sequence[int], i: int) -> tuple[int, ...]:
    """Non-spine path from ``x_{i-1}`` to ``x_{i+1}`` inside ``N(x_i)``."""
    x = spine[i]
    nbrs = g.adjsets[x]
    a, b = spine[i - 1], spine[i + 1]
    if a not in nbrs or b not in nbrs:
        raise RecognitionError(f"spine vertices {a}, {b} not both adjacent to {x}")
    prev = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for v in g.adj[u]:
            if v in nbrs and v not in prev and (v == b or v not in spine[i - 1 : i + 2]):
                prev[v] = u
                queue.append(v)
    if b not in prev:
        raise RecognitionError(f"no fan centred on {x}")
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    arc = tuple(path[1:-1])
    if not arc:
        raise RecognitionError(f"empty fan arc at {x}")
    return arc


def fan_decomposition_for_spine(g: Graph, spine: Sequence[int]) -> FanDecomposition:
    """Fans along a given spine of a 2-path, checked against the definition."""
    spine = tuple(spine)
    d = len(spine) - 1
    if d < 2:
        raise RecognitionError("spine of a fan graph needs length at least 2")
    fans: list[Fan] = []
    side: Side = "upper"
    for i in range(1, d):
        arc = _arc(g, spine, i)
        if fans:
            prev = fans[-1].arc
            shared = set(prev) & set(arc)
            if not shared:
                side = "lower" if side == "upper" else "upper"
            elif not (shared == {prev[-1]} and prev[-1] == arc[0]):
                raise RecognitionError(f"fans at {spine[i - 1]} and {spine[i]} overlap irregularly")
        fans.append(Fan(spine[i], arc, side))
    fd = FanDecomposition(spine, tuple(fans))
    on_spine = set(spine)
    for f in fans:
        if on_spine & set(f.arc):
            raise RecognitionError("fan arc meets the spine")
    if fd.vertices() != set(range(g.n)) or len(fd.edges()) != g.m:
        raise RecognitionError("fans do not cover the graph exactly")
    return fd


def make_pleasant(fd: FanDecomposition) -> FanDecomposition:
    """Swap ``x_i`` with ``v_{i,1}`` wherever ``F'_{i-1}`` and ``F'_{i+1}`` meet.

    That only happens when ``k_i = 1`` and ``v_{i,1}`` is shared with both
    neighbouring fans; after the swap the old ``x_i`` is the single arc
    vertex of the middle fan, which sits on the other side.
    """
    spine = list(fd.spine)
    fans = list(fd.fans)
    d = len(spine) - 1
    changed = True
    while changed:
        changed = False
        for i in range(2, d - 1):
            left, mid, right = fans[i - 2], fans[i - 1], fans[i]
            if not (set(left.arc) & set(right.arc)):
                continue
            v = mid.arc[0]
            old = spine[i]
            assert mid.k == 1 and left.arc[-1] == v == right.arc[0]
            spine[i] = v
            fans[i - 2] = Fan(left.center, left.arc[:-1], left.side)
            flipped: Side = "lower" if left.side == "upper" else "upper"
            fans[i - 1] = Fan(v, (old,), flipped)
            fans[i] = Fan(right.center, right.arc[1:], right.side)
            changed = True
    return FanDecomposition(tuple(spine), tuple(fans))


def _block_simplicial(g: Graph) -> list[int]:
    return [v for v in range(g.n) if is_simplicial(g, v)]


def decompose_two_path(g: Graph) -> FanDecomposition:
    """Pleasant fan decomposition of a 2-path of diameter at least 2."""
    ok, _ = is_two_tree(g)
    if not ok:
        raise RecognitionError("not a 2-tree")
    simp = _block_simplicial(g)
    if len(simp) != 2:
        raise RecognitionError(f"{len(simp)} simplicial vertices, a 2-path has exactly 2")
    r, s = simp
    spine = lex_shortest_path(g, r, s)
    if len(spine) < 3:
        raise RecognitionError("diameter below 2")
    return make_pleasant(fan_decomposition_for_spine(g, spine))


@dataclass(frozen=True, eq=False)
class BlockPart:
    vertices: tuple[int, ...]
    fd: FanDecomposition

    @property
    def is_edge(self) -> bool:
        return len(self.vertices) == 2

    @property
    def ends(self) -> tuple[int, int]:
        return self.fd.spine[0], self.fd.spine[-1]


@dataclass(frozen=True, eq=False)
class SemiTwoTreeStructure:
    g: Graph
    block_structure: BlockStructure
    per_block: tuple[BlockPart, ...]
    skeleton_adj: tuple[tuple[int, ...], ...]
    e_T: int

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def b(self) -> int:
        return len(self.per_block)

    @cached_property
    def skeleton_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.g.n) if self.skeleton_adj[v])

    def skeleton_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.g.n) for v in self.skeleton_adj[u] if u < v]

    @cached_property
    def skeleton_tree(self) -> tuple[Graph, list[int]]:
        """The skeleton as a standalone tree with its new-to-old id map."""
        if self.g.n == 1:
            return Graph(1, ((),)), [0]
        old = list(self.skeleton_vertices)
        new_of = {v: i for i, v in enumerate(old)}
        adj = tuple(tuple(sorted(new_of[w] for w in self.skeleton_adj[v])) for v in old)
        return Graph(len(old), adj), old

    @cached_property
    def simplicial(self) -> frozenset[int]:
        cuts = self.block_structure.cut_vertices
        if self.g.n == 1:
            return frozenset([0])
        return frozenset(v for p in self.per_block for v in p.ends if v not in cuts)

    def block_of(self, v: int) -> int:
        """Index of the unique block of a non-cut vertex."""
        (bi,) = self.block_structure.vertex_blocks[v]
        return bi

    def is_cut(self, v: int) -> bool:
        return v in self.block_structure.cut_vertices

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "b": self.b,
            "e_T": self.e_T,
            "cut_vertices": sorted(self.block_structure.cut_vertices),
            "simplicial": sorted(self.simplicial),
            "skeleton": [list(e) for e in self.skeleton_edges()],
            "blocks": [
                {"vertices": list(p.vertices), **p.fd.to_json()} for p in self.per_block
            ],
        }


def decompose_block(g: Graph, block: Sequence[int]) -> BlockPart:
    verts = tuple(sorted(block))
    if len(verts) == 2:
        u, v = verts
        return BlockPart(verts, FanDecomposition((u, v), ()))
    sub, old = g.induced(verts)
    try:
        fd = decompose_two_path(sub)
    except RecognitionError as exc:
        raise RecognitionError(f"block {list(verts)}: {exc}") from None
    return BlockPart(verts, fd.relabel(old))


def recognize_semi_two_tree(g: Graph) -> SemiTwoTreeStructure:
    bs = blocks_and_cut_vertices(g)
    if g.n == 1:
        return SemiTwoTreeStructure(g, bs, (), ((),), 0)
    parts = tuple(decompose_block(g, block) for block in bs.blocks)
    for c in sorted(bs.cut_vertices):
        for bi in bs.vertex_blocks[c]:
            if c not in parts[bi].ends:
                raise RecognitionError(
                    f"cut vertex {c} is not simplicial in block {list(parts[bi].vertices)}"
                )
    skel: list[list[int]] = [[] for _ in range(g.n)]
    e_T = 0
    for p in parts:
        sp = p.fd.spine
        for a, b in zip(sp, sp[1:]):
            skel[a].append(b)
            skel[b].append(a)
            e_T += 1
    return SemiTwoTreeStructure(g, bs, parts, tuple(tuple(sorted(a)) for a in skel), e_T)


def is_semi_two_tree(g: Graph) -> bool:
    try:
        recognize_semi_two_tree(g)
    except GraphError:
        return False
    return True


def block_distances(g: Graph, block: Sequence[int], src: int) -> dict[int, int]:
    inside = set(block)
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v in inside and v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def lies_on_some_skeleton(s: SemiTwoTreeStructure, r: int) -> bool:
    if r in s.simplicial or s.is_cut(r) or s.g.n <= 2:
        return True
    part = s.per_block[s.block_of(r)]
    u, w = part.ends
    du = block_distances(s.g, part.vertices, u)
    dw = block_distances(s.g, part.vertices, w)
    return du[r] + dw[r] == part.fd.d


def respine_through(s: SemiTwoTreeStructure, r: int) -> FanDecomposition:
    """Pleasant decomposition of r's block whose spine is built through ``r``.

    Requires the distance test of :func:`lies_on_some_skeleton`.  The result
    may still have ``r`` off the spine if making it pleasant swaps ``r`` out.
    """
    part = s.per_block[s.block_of(r)]
    sub, old = s.g.induced(part.vertices)
    new_of = {v: i for i, v in enumerate(old)}
    u, w = new_of[part.ends[0]], new_of[part.ends[1]]
    x = new_of[r]
    spine = lex_shortest_path(sub, u, x)[:-1] + lex_shortest_path(sub, x, w)
    if len(spine) - 1 != part.fd.d:
        raise RecognitionError(f"{r} does not lie on a shortest spine")
    fd = make_pleasant(fan_decomposition_for_spine(sub, spine))
    return fd.relabel(old)


def internal_fan_data(
    s: SemiTwoTreeStructure, r: int, fd: FanDecomposition | None = None
) -> InternalFanData:
    """``A_r`` and, when it is empty, the edge ``e_r`` whose removal splits the block at ``r``.

    With ``k_i = 1`` the single arc vertex ``v`` is shared with one
    neighbouring fan; the edge removed is the one from ``v`` to the spine
    vertex on the *other* side (``x_{i-1} v`` when ``v`` is shared with
    ``F_{i+1}``).  With ``k_i = 2`` it is the arc edge.  The split is checked.
    """
    if s.is_cut(r) or r in s.simplicial:
        raise RecognitionError(f"{r} is a cut or simplicial vertex")
    if fd is None:
        fd = s.per_block[s.block_of(r)].fd
    if r not in fd.spine[1:-1]:
        raise RecognitionError(f"{r} is not an internal spine vertex")
    i = fd.spine.index(r)
    arc = fd.fan_at(i).arc
    others = fd.arc_set(i - 1) | fd.arc_set(i + 1)
    A = frozenset(v for v in arc if v not in others)
    e: tuple[int, int] | None = None
    if not A:
        if len(arc) == 1:
            v = arc[0]
            if v in fd.arc_set(i + 1):
                e = _edge(fd.spine[i - 1], v)
            else:
                e = _edge(v, fd.spine[i + 1])
        elif len(arc) == 2:
            e = _edge(arc[0], arc[1])
        else:
            raise RecognitionError(f"arc at {r} has no private vertex but {len(arc)} vertices")
        h = s.g.without_edges([e])
        removed: list[int] = []
    else:
        h, old = s.g.without_vertices(A)
        removed = sorted(A)
    _check_split(s, h, r, removed)
    return InternalFanData(r, i, A, e)


def _check_split(s: SemiTwoTreeStructure, h: Graph, r: int, removed: list[int]) -> None:
    old = [v for v in range(s.g.n) if v not in set(removed)]
    rr = old.index(r)
    hs = recognize_semi_two_tree(h)
    if not hs.is_cut(rr):
        raise RecognitionError(f"removal does not split the block at {r}")


def fan_vertices(fd: FanDecomposition) -> set[int]:
    return fd.vertices() - set(fd.spine)
