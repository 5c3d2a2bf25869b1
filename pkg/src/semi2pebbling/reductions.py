"""Removal rewrites, saturating matchings and extremal certificates.

Four rewrites shrink a rooted graph without changing the question being
asked: deleting an empty junior vertex, deleting a wart of small piles,
deleting an edge between two root neighbours, and splitting off root
neighbours whose own neighbourhoods stay inside ``N[r]``.  The extremal
certificate generators follow the root classification of
:mod:`semi2pebbling.formulas` and build an unsolvable configuration whose
size is the formula value minus one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence, Union

from .graph import Configuration, Graph, GraphError, bfs_distances, components
from .formulas import (
    OneFan,
    RootClass,
    SimplicialOrCut,
    SpineInternal,
    TwoFans,
    pebbling_number_at,
)
from .structure import RecognitionError, SemiTwoTreeStructure, recognize_semi_two_tree
from .trees import tree_extremal_config


class ReductionError(GraphError):
    """A rewrite's precondition does not hold."""


@dataclass(frozen=True)
class Junior:
    y: int
    x: int
    kind = "junior"

    def to_json(self) -> dict:
        return {"kind": self.kind, "y": self.y, "x": self.x}


@dataclass(frozen=True)
class Wart:
    W: tuple[int, ...]
    X: tuple[int, ...]
    kind = "wart"

    def to_json(self) -> dict:
        return {"kind": self.kind, "W": list(self.W), "X": list(self.X)}


@dataclass(frozen=True)
class EdgeStep:
    e: tuple[int, int]
    kind = "edge"

    def to_json(self) -> dict:
        return {"kind": self.kind, "e": list(self.e)}


@dataclass(frozen=True)
class Neighbor:
    A: tuple[int, ...]
    kind = "neighbor"

    def to_json(self) -> dict:
        return {"kind": self.kind, "A": list(self.A)}


ReductionStep = Union[Junior, Wart, EdgeStep, Neighbor]


@dataclass(frozen=True)
class Reduced:
    """Result of a vertex-deleting rewrite; ``old[i]`` is the original id of vertex ``i``."""

    graph: Graph
    config: Configuration
    root: int
    old: list[int]
    step: ReductionStep


# -- junior and wart removal ----------------------------------------------


def junior_of(g: Graph, y: int) -> int | None:
    """Smallest ``x != y`` with ``N(y)`` inside ``N[x]``, or None."""
    ny = g.adjsets[y]
    candidates = set(ny)
    for u in ny:
        candidates |= g.adjsets[u]
    candidates.discard(y)
    for x in sorted(candidates):
        if all(u == x or u in g.adjsets[x] for u in ny):
            return x
    return None


def _remove(g: Graph, c: Configuration, r: int, removed: Sequence[int], step: ReductionStep) -> Reduced:
    h, old = g.without_vertices(removed)
    return Reduced(h, c.restrict(old), old.index(r), old, step)


def find_junior(g: Graph, c: Configuration, r: int, order: Sequence[int] | None = None) -> Junior | None:
    for y in order if order is not None else range(g.n):
        if y == r or c[y] != 0:
            continue
        x = junior_of(g, y)
        if x is not None:
            return Junior(y, x)
    return None


def junior_removal(g: Graph, c: Configuration, r: int, order: Sequence[int] | None = None) -> Reduced:
    """Delete the first empty non-root junior (id order unless ``order`` is given)."""
    step = find_junior(g, c, r, order)
    if step is None:
        raise ReductionError("no empty junior")
    return _remove(g, c, r, [step.y], step)


def _small_cliques(g: Graph, max_size: int = 3):
    for v in range(g.n):
        yield (v,)
    if max_size >= 2:
        for u, v in g.edges():
            yield (u, v)
    if max_size >= 3:
        for u, v in g.edges():
            for w in sorted(g.adjsets[u] & g.adjsets[v]):
                if w > v:
                    yield (u, v, w)


def find_warts(g: Graph, c: Configuration, r: int, max_clique: int = 3) -> list[Wart]:
    """Every wart avoiding ``r`` with at most one pebble per vertex.

    Clique cutsets are searched up to ``max_clique`` vertices, which covers
    every clique of a 2-tree.  Results are ordered by size, then by vertex ids.
    """
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    for X in _small_cliques(g, max_clique):
        comps = components(g, X)
        if len(comps) < 2:
            continue
        for comp in comps:
            W = tuple(sorted(comp))
            if r in comp or W in found:
                continue
            if all(c[w] <= 1 for w in W):
                found[W] = X
    return [Wart(W, X) for W, X in sorted(found.items(), key=lambda kv: (len(kv[0]), kv[0]))]


def is_wart(g: Graph, W: Sequence[int], X: Sequence[int]) -> bool:
    if any(not g.has_edge(a, b) for a, b in combinations(X, 2)):
        return False
    comps = components(g, X)
    return len(comps) >= 2 and sorted(W) in [sorted(comp) for comp in comps]


def wart_removal(g: Graph, c: Configuration, r: int) -> Reduced:
    """Delete the smallest eligible wart."""
    warts = find_warts(g, c, r)
    if not warts:
        raise ReductionError("no eligible wart")
    step = warts[0]
    return _remove(g, c, r, step.W, step)


# -- edge and neighbour removal -------------------------------------------


def edge_removal(g: Graph, r: int, e: tuple[int, int]) -> Graph:
    u, v = e
    if r in (u, v):
        raise ReductionError("edge is incident to the root")
    if not g.has_edge(u, v):
        raise ReductionError(f"no edge ({u}, {v})")
    if u not in g.adjsets[r] or v not in g.adjsets[r]:
        raise ReductionError("edge ends are not both neighbours of the root")
    return g.without_edges([(u, v)])


def removable_edges(g: Graph, r: int) -> list[tuple[int, int]]:
    nr = g.adjsets[r]
    return [(u, v) for u, v in g.edges() if u in nr and v in nr]


@dataclass(frozen=True)
class NeighborSplit:
    """``G - A`` plus the pieces of ``(G - r) - A`` with ``r`` added back.

    ``pieces`` holds vertex sets in original ids; ``delta`` is ``|A|``.
    """

    graph: Graph
    old: list[int]
    root: int
    delta: int
    pieces: tuple[tuple[int, ...], ...]
    step: Neighbor


def check_neighbor_set(g: Graph, r: int, A: Sequence[int]) -> None:
    closed = g.adjsets[r] | {r}
    for a in A:
        if a not in g.adjsets[r]:
            raise ReductionError(f"{a} is not a neighbour of the root")
        if not g.adjsets[a] <= closed:
            raise ReductionError(f"{a} has a neighbour outside N[r]")


def neighbor_removal(g: Graph, r: int, A: Sequence[int]) -> NeighborSplit:
    check_neighbor_set(g, r, A)
    A = tuple(sorted(set(A)))
    h, old = g.without_vertices(A)
    pieces = tuple(tuple(sorted(comp + [r])) for comp in components(g, (r,) + A))
    return NeighborSplit(h, old, old.index(r), len(A), pieces, Neighbor(A))


def maximal_neighbor_set(g: Graph, r: int) -> tuple[int, ...]:
    closed = g.adjsets[r] | {r}
    return tuple(a for a in sorted(g.adjsets[r]) if g.adjsets[a] <= closed)


# -- matchings ------------------------------------------------------------


def saturating_matching(s: SemiTwoTreeStructure) -> dict[int, int]:
    """Match every internal spine vertex to an arc vertex of its own fan.

    Kuhn's augmenting-path algorithm per block, spine vertices taken in
    spine order.
    """
    match: dict[int, int] = {}
    for part in s.per_block:
        fd = part.fd
        owner: dict[int, int] = {}

        def augment(i: int, seen: set[int]) -> bool:
            for v in fd.fan_at(i).arc:
                if v in seen:
                    continue
                seen.add(v)
                if v not in owner or augment(owner[v], seen):
                    owner[v] = i
                    return True
            return False

        for i in range(1, fd.d):
            if not augment(i, set()):
                raise AssertionError(f"fan at {fd.spine[i]} cannot be saturated")
        for v, i in owner.items():
            match[fd.spine[i]] = v
    return dict(sorted(match.items()))


# -- extremal certificates ------------------------------------------------


@dataclass(frozen=True)
class ExtremalCertificate:
    config: Configuration
    root: int
    t: int
    claimed_size: int
    root_class: RootClass
    matching: dict[int, int] = field(default_factory=dict)
    reductions: tuple[ReductionStep, ...] = ()
    derived: bool = False

    def to_json(self) -> dict:
        return {
            "root": self.root,
            "t": self.t,
            "config": list(self.config.counts),
            "size": self.config.size,
            "claimed_size": self.claimed_size,
            "class": self.root_class.name,
            "matching": [[k, v] for k, v in self.matching.items()],
            "reductions": [step.to_json() for step in self.reductions],
            "derived": self.derived,
        }


def _skeleton_extremal(s: SemiTwoTreeStructure, r: int, t: int) -> tuple[list[int], dict[int, int]]:
    g = s.g
    tree, old = s.skeleton_tree
    tree_config = tree_extremal_config(tree, old.index(r), t)
    counts = [1] * g.n
    for i, v in enumerate(old):
        counts[v] = tree_config[i]
    match = saturating_matching(s)
    for v in match.values():
        counts[v] = 0
    return counts, match


def _lift(counts_sub: Sequence[int], old: Sequence[int], n: int) -> list[int]:
    counts = [0] * n
    for i, v in enumerate(old):
        counts[v] = counts_sub[i]
    return counts


def _sub_extremal(g: Graph, keep, root: int, t: int) -> list[int]:
    sub, old = g.induced(keep)
    counts, _, _ = _extremal_counts(recognize_semi_two_tree(sub), old.index(root), t)
    return _lift(counts, old, g.n)


def _side_extremal(g: Graph, side: frozenset[int], r: int, x: int) -> list[int]:
    sub, _ = g.induced(side)
    try:
        recognize_semi_two_tree(sub)
    except RecognitionError:
        counts = _sub_extremal(g, side - {x}, r, 1)
        counts[x] = 1
        return counts
    return _sub_extremal(g, side, r, 1)


def _extremal_counts(s: SemiTwoTreeStructure, r: int, t: int) -> tuple[list[int], dict[int, int], RootClass]:
    g = s.g
    ans = pebbling_number_at(s, r, t)
    cls = ans.root_class
    if isinstance(cls, SimplicialOrCut):
        counts, match = _skeleton_extremal(s, r, t)
        return counts, match, cls
    if isinstance(cls, SpineInternal):
        if cls.data.A_r:
            counts = _sub_extremal(g, [v for v in range(g.n) if v not in cls.data.A_r], r, t)
            for a in cls.data.A_r:
                counts[a] = 1
            return counts, {}, cls
        h = g.without_edges([cls.data.e_r])
        counts, _, _ = _extremal_counts(recognize_semi_two_tree(h), r, t)
        return counts, {}, cls
    if isinstance(cls, TwoFans):
        h = g.without_edges([cls.edge])
        counts, _, _ = _extremal_counts(recognize_semi_two_tree(h), r, t)
        return counts, {}, cls
    assert isinstance(cls, OneFan)
    c1 = _side_extremal(g, cls.G1, r, cls.x)
    c2 = _sub_extremal(g, cls.G2 - cls.V2 - {r}, cls.x, 1)
    for v in cls.V2:
        c2[v] = 1
    counts = [a + b for a, b in zip(c1, c2)]
    if t > 1:
        dist = bfs_distances(g, r).dist
        ecc = max(dist)
        far = min((v for v in range(g.n) if dist[v] == ecc), key=lambda v: (-counts[v], v))
        counts[far] += (t - 1) * 2 ** dist[far]
    return counts, {}, cls


def extremal_config(s: SemiTwoTreeStructure, r: int, t: int = 1) -> ExtremalCertificate:
    """An r-unsolvable configuration of size ``pi_t(G, r) - 1``.

    Simplicial and cut roots get the skeleton tree certificate, zeros on a
    saturating matching and one pebble everywhere else, plus the junior and
    wart removals that shrink the graph to its skeleton.  Other roots reuse
    the certificate of the reduced graph.  A one-fan root with ``t > 1`` adds
    ``(t - 1) 2^ecc(r)`` pebbles on the fullest farthest vertex; that construction is
    checked by the oracle rather than by a proof, so it is marked derived.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    value = pebbling_number_at(s, r, t).value
    counts, match, cls = _extremal_counts(s, r, t)
    config = Configuration(tuple(counts))
    reductions: tuple[ReductionStep, ...] = ()
    if isinstance(cls, SimplicialOrCut):
        reductions = tuple(reduce_to_skeleton(s, config, r, match))
    derived = isinstance(cls, OneFan) and t > 1
    if config.size != value - 1:
        raise AssertionError(f"certificate size {config.size} differs from {value - 1}")
    return ExtremalCertificate(config, r, t, value - 1, cls, match, reductions, derived)


def reduce_to_skeleton(
    s: SemiTwoTreeStructure, c: Configuration, r: int, match: dict[int, int] | None = None
) -> list[ReductionStep]:
    """Junior and wart removals taking ``(G, c)`` down to the skeleton.

    Empty juniors are tried first, matched vertices in spine order, then
    single-vertex warts, then larger warts.  Skeleton vertices are never
    removed.  Steps are reported in original vertex ids.
    """
    g = s.g
    skeleton = set(s.skeleton_vertices) if s.n > 1 else {0}
    if match is None:
        match = saturating_matching(s)
    preferred = list(match.values())
    steps: list[ReductionStep] = []
    old = list(range(g.n))
    h, cur, root = g, c, r
    while len(old) > len(skeleton):
        local = {v: i for i, v in enumerate(old)}
        order = [local[v] for v in preferred if v in local]
        order += [i for i in range(h.n) if old[i] not in skeleton and i not in order]
        step: ReductionStep | None = find_junior(h, cur, root, order)
        if step is not None and old[step.y] in skeleton:
            step = None
        if step is None:
            warts = [w for w in find_warts(h, cur, root) if not any(old[v] in skeleton for v in w.W)]
            if not warts:
                raise AssertionError(f"reduction stalls with {len(old)} vertices left")
            step = warts[0]
            removed = list(step.W)
        else:
            removed = [step.y]
        red = _remove(h, cur, root, removed, step)
        steps.append(_relabel(step, old))
        old = [old[i] for i in red.old]
        h, cur, root = red.graph, red.config, red.root
    if set(old) != skeleton:
        raise AssertionError("reduction ended away from the skeleton")
    return steps


def _relabel(step: ReductionStep, old: Sequence[int]) -> ReductionStep:
    if isinstance(step, Junior):
        return Junior(old[step.y], old[step.x])
    if isinstance(step, Wart):
        return Wart(tuple(old[v] for v in step.W), tuple(old[v] for v in step.X))
    return step
