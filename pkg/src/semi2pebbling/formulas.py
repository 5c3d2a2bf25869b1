"""Closed-form pebbling numbers for 2-paths and semi-2-trees.

For a simplicial or cut-vertex root the answer is a skeleton tree value
plus a correction counting vertices, blocks and skeleton edges.  Every other
root is reduced to that case by deleting one edge, deleting the private arc
vertices of its fan, or splitting the graph at the fan centre.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .graph import Graph, GraphError, bfs_distances, components
from .structure import (
    FanDecomposition,
    InternalFanData,
    RecognitionError,
    SemiTwoTreeStructure,
    decompose_two_path,
    internal_fan_data,
    is_two_tree,
    lies_on_some_skeleton,
    recognize_semi_two_tree,
    respine_through,
)
from .trees import formula_from_counts, peripheral_root_lengths, tree_pebbling_number


@dataclass(frozen=True)
class SimplicialOrCut:
    name = "simplicial-or-cut"

    def to_json(self) -> dict:
        return {"name": self.name}


@dataclass(frozen=True)
class SpineInternal:
    data: InternalFanData
    fd: FanDecomposition
    name = "spine-internal"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "A_r": sorted(self.data.A_r),
            "e_r": list(self.data.e_r) if self.data.e_r else None,
            "spine": list(self.fd.spine),
        }


@dataclass(frozen=True)
class TwoFans:
    x: int
    y: int
    name = "two-fans"

    @property
    def edge(self) -> tuple[int, int]:
        return (min(self.x, self.y), max(self.x, self.y))

    def to_json(self) -> dict:
        return {"name": self.name, "centers": [self.x, self.y]}


@dataclass(frozen=True)
class OneFan:
    """``r`` lies in a single fan centred on ``x``.

    ``G1`` and ``G2`` are the vertex sets of the two sides (each includes
    ``r`` and ``x``); ``V1``/``V2`` are the private arc vertices on each side.
    The sides are labelled so that ``V2`` is empty, or both are non-empty and
    ``ecc_{G1}(r) >= ecc_{G2}(r)``.
    """

    x: int
    G1: frozenset[int]
    G2: frozenset[int]
    V1: frozenset[int]
    V2: frozenset[int]
    fd: FanDecomposition
    name = "one-fan"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "center": self.x,
            "G1": sorted(self.G1),
            "G2": sorted(self.G2),
            "V1": sorted(self.V1),
            "V2": sorted(self.V2),
        }


RootClass = Union[SimplicialOrCut, SpineInternal, TwoFans, OneFan]


@dataclass(frozen=True)
class PebblingAnswer:
    value: int
    root: int
    t: int
    root_class: RootClass
    chain: tuple[dict, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "pi": self.value,
            "t": self.t,
            "root": self.root,
            "class": self.root_class.name,
            "details": self.root_class.to_json(),
            "chain": list(self.chain),
        }


def _check_two_path_root(g: Graph, r: int) -> int:
    if g.n == 2 and g.m == 1:
        return 1
    ok, _ = is_two_tree(g)
    if not ok:
        raise RecognitionError("not a 2-tree")
    fd = decompose_two_path(g)
    if r not in (fd.spine[0], fd.spine[-1]):
        raise RecognitionError(f"root {r} is not simplicial")
    return bfs_distances(g, r).ecc


def p_two_path(g: Graph, r: int, t: int = 1) -> int:
    d = _check_two_path_root(g, r)
    return t * 2**d + g.n - 2 * d


def q_two_path(g: Graph, r: int) -> int:
    d = _check_two_path_root(g, r)
    return 2**d + g.n - d - 1


def _require_simplicial_or_cut(s: SemiTwoTreeStructure, r: int) -> None:
    if not (r in s.simplicial or s.is_cut(r) or s.n <= 2):
        raise RecognitionError(f"root {r} is neither simplicial nor a cut vertex")


def skeleton_pebbling_number(s: SemiTwoTreeStructure, r: int, t: int = 1) -> int:
    tree, old = s.skeleton_tree
    return tree_pebbling_number(tree, old.index(r), t)


def p_semi(s: SemiTwoTreeStructure, r: int, t: int = 1) -> int:
    _require_simplicial_or_cut(s, r)
    return skeleton_pebbling_number(s, r, t) + (s.n - 1) + s.b - 2 * s.e_T


def q_semi(s: SemiTwoTreeStructure, r: int) -> int:
    _require_simplicial_or_cut(s, r)
    return skeleton_pebbling_number(s, r, 1) + s.n - s.e_T - 1


def _one_fan(s: SemiTwoTreeStructure, r: int, fd: FanDecomposition, i: int) -> OneFan:
    g = s.g
    x = fd.spine[i]
    arc = fd.fan_at(i).arc
    comps = components(g, [r, x])
    if len(comps) != 2:
        raise RecognitionError(f"removing {r} and {x} leaves {len(comps)} components")
    others = fd.arc_set(i - 1) | fd.arc_set(i + 1)
    private = {v for v in arc if v not in others and v != r}
    # the side holding x_{i-1} comes first before relabelling
    if fd.spine[i - 1] not in comps[0]:
        comps.reverse()
    sides = []
    for comp in comps:
        members = frozenset(comp) | {r, x}
        sides.append((members, frozenset(v for v in comp if v in private)))
    (A, VA), (B, VB) = sides
    if not VA and VB:
        (A, VA), (B, VB) = (B, VB), (A, VA)
    elif VA and VB:
        ea = _ecc_in(g, A, r)
        eb = _ecc_in(g, B, r)
        if eb > ea:
            (A, VA), (B, VB) = (B, VB), (A, VA)
    return OneFan(x, A, B, VA, VB, fd)


def _ecc_in(g: Graph, vertices: frozenset[int], src: int) -> int:
    sub, old = g.induced(vertices)
    return bfs_distances(sub, old.index(src)).ecc


def classify_root(s: SemiTwoTreeStructure, r: int) -> RootClass:
    if r in s.simplicial or s.is_cut(r) or s.n <= 2:
        return SimplicialOrCut()
    fd = s.per_block[s.block_of(r)].fd
    if r in fd.spine and lies_on_some_skeleton(s, r):
        return SpineInternal(internal_fan_data(s, r, fd), fd)
    if lies_on_some_skeleton(s, r):
        fd = respine_through(s, r)
        if r in fd.spine:
            return SpineInternal(internal_fan_data(s, r, fd), fd)
    where = fd.fans_containing(r)
    if len(where) == 2:
        i, j = where
        return TwoFans(fd.spine[i], fd.spine[j])
    if len(where) == 1:
        return _one_fan(s, r, fd, where[0])
    raise RecognitionError(f"vertex {r} lies in {len(where)} fans")


def _sub_answer(g: Graph, keep, root: int, t: int) -> tuple[int, list[dict]]:
    """Pebbling number of the induced subgraph on ``keep`` rooted at ``root``."""
    sub, old = g.induced(keep)
    ans = pebbling_number_at(recognize_semi_two_tree(sub), old.index(root), t)
    chain = [_relabel_step(step, old) for step in ans.chain]
    return ans.value, chain


_VERTEX_KEYS = ("root", "center")
_VERTEX_LIST_KEYS = ("removed", "removed_edge", "G1", "G2")


def _relabel_step(step: dict, old: list[int]) -> dict:
    out = dict(step)
    for key in _VERTEX_KEYS:
        if key in out:
            out[key] = old[out[key]]
    for key in _VERTEX_LIST_KEYS:
        if key in out:
            out[key] = [old[v] for v in out[key]]
    return out


def _pi_side_root(g: Graph, side: frozenset[int], r: int, x: int) -> tuple[int, list[dict]]:
    """``pi(G_i, r)``; a triangle block {r, x, y} is handled by removing ``x``."""
    sub, old = g.induced(side)
    try:
        recognize_semi_two_tree(sub)
    except RecognitionError:
        value, chain = _sub_answer(g, side - {x}, r, 1)
        return value + 1, chain + [{"step": "neighbor-removal", "removed": [x], "plus": 1}]
    return _sub_answer(g, side, r, 1)


def pebbling_number_at(s: SemiTwoTreeStructure, r: int, t: int = 1) -> PebblingAnswer:
    if t < 1:
        raise ValueError("t must be at least 1")
    g = s.g
    cls = classify_root(s, r)
    if isinstance(cls, SimplicialOrCut):
        tree_value = skeleton_pebbling_number(s, r, t)
        value = tree_value + (s.n - 1) + s.b - 2 * s.e_T
        step = {
            "step": "p_semi",
            "root": r,
            "tree_pi": tree_value,
            "n": s.n,
            "b": s.b,
            "e_T": s.e_T,
            "value": value,
        }
        return PebblingAnswer(value, r, t, cls, (step,))
    if isinstance(cls, SpineInternal):
        data = cls.data
        if data.A_r:
            keep = [v for v in range(g.n) if v not in data.A_r]
            sub_value, chain = _sub_answer(g, keep, r, t)
            value = sub_value + len(data.A_r)
            step = {"step": "spine-internal", "root": r, "removed": sorted(data.A_r), "plus": len(data.A_r), "value": value}
        else:
            h = g.without_edges([data.e_r])
            ans = pebbling_number_at(recognize_semi_two_tree(h), r, t)
            sub_value, chain = ans.value, list(ans.chain)
            value = sub_value
            step = {"step": "spine-internal", "root": r, "removed_edge": list(data.e_r), "value": value}
        return PebblingAnswer(value, r, t, cls, tuple([step] + chain))
    if isinstance(cls, TwoFans):
        h = g.without_edges([cls.edge])
        ans = pebbling_number_at(recognize_semi_two_tree(h), r, t)
        step = {"step": "two-fans", "root": r, "removed_edge": list(cls.edge), "value": ans.value}
        return PebblingAnswer(ans.value, r, t, cls, (step,) + ans.chain)
    assert isinstance(cls, OneFan)
    ecc = bfs_distances(g, r).ecc
    value1, chain = _one_fan_value(g, r, cls)
    flipped = swap_sides(cls)
    other, other_chain = _one_fan_value(g, r, flipped)
    if other > value1:
        cls, value1, chain = flipped, other, other_chain
    value = value1 + (t - 1) * 2**ecc
    step = {"step": "one-fan", "root": r, "center": cls.x, "value_t1": value1, "ecc": ecc, "value": value}
    return PebblingAnswer(value, r, t, cls, tuple([step] + chain))


def swap_sides(cls: OneFan) -> OneFan:
    return OneFan(cls.x, cls.G2, cls.G1, cls.V2, cls.V1, cls.fd)


def _one_fan_value(g: Graph, r: int, cls: OneFan) -> tuple[int, list[dict]]:
    """``pi(G1, r) + pi(G2, x) - 2`` for the labelling stored in ``cls``.

    Both labellings give an unsolvable configuration of size one less than
    this, so the caller keeps the larger of the two.
    """
    x = cls.x
    pi1, chain1 = _pi_side_root(g, cls.G1, r, x)
    base, chain2 = _sub_answer(g, cls.G2 - cls.V2 - {r}, x, 1)
    pi2 = base + len(cls.V2) + 1
    step = {"step": "split", "G1": sorted(cls.G1), "pi_G1_r": pi1, "G2": sorted(cls.G2), "pi_G2_x": pi2}
    return pi1 + pi2 - 2, [step] + chain1 + chain2


def best_root(s: SemiTwoTreeStructure) -> tuple[int, int]:
    """Smallest simplicial vertex of maximum eccentricity, with that eccentricity.

    Every vertex of maximum eccentricity in the skeleton is a skeleton
    leaf, and skeleton leaves are exactly the simplicial vertices.
    """
    r_star, diam, _ = _skeleton_scan(s)
    return r_star, diam


def _skeleton_scan(s: SemiTwoTreeStructure) -> tuple[int, int, dict[int, int]]:
    if s.n == 1:
        return 0, 0, {}
    return peripheral_root_lengths(s.n, s.skeleton_adj, s.per_block[0].fd.spine[0])


def pebbling_number(s: SemiTwoTreeStructure, t: int = 1) -> PebblingAnswer:
    """``pi_t(G)``: the value at a simplicial root of maximum eccentricity.

    Linear time: one breadth-first search of the skeleton plus sweeps.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    r_star, diam, counts = _skeleton_scan(s)
    tree_value = formula_from_counts(counts, t)
    value = tree_value + (s.n - 1) + s.b - 2 * s.e_T
    step = {
        "step": "p_semi",
        "root": r_star,
        "tree_pi": tree_value,
        "n": s.n,
        "b": s.b,
        "e_T": s.e_T,
        "diam": diam,
        "value": value,
    }
    return PebblingAnswer(value, r_star, t, SimplicialOrCut(), (step,))
