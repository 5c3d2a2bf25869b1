"""Brute-force ground truth for pebbling questions on small graphs.

Everything here works directly on the game: states are pebble-count
vectors, a move takes two pebbles off a vertex and puts one on a neighbour.
Nothing in this module uses the closed-form formulas, so it can be used to
check them.

Two facts keep the search finite and reasonably quick:

* the dyadic weight ``sum c(v) * 2**-dist(v, r)`` never increases under a
  move, so a state whose weight is below the number of pebbles still needed
  at the root is dead;
* moves out of the root are never needed.  A minimal solution has an acyclic
  step digraph, and a step out of ``r`` in an acyclic solution can never feed
  a pebble back to ``r``, so dropping it (and everything it fed) keeps the
  solution valid.

All arithmetic is on integers; the weight is kept as a numerator over the
common denominator ``2**ecc(r)``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Configuration, DistanceMap, Graph, bfs_distances

DEFAULT_STATE_BUDGET = 10**7
DEFAULT_TOTAL_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The search hit its state budget before reaching a verdict."""


class UnsolvableError(ValueError):
    pass


@dataclass(frozen=True)
class SolutionTrace:
    steps: tuple[tuple[int, int], ...]
    delivered: int = 1

    @property
    def cost(self) -> int:
        """Pebbles lost in the steps plus one per pebble delivered to the root."""
        return len(self.steps) + self.delivered

    def to_json(self) -> list[list[int]]:
        return [[u, v] for u, v in self.steps]


@dataclass(frozen=True)
class OracleVerdict:
    solvable: bool
    trace: SolutionTrace | None
    states_explored: int
    bound_used: int


@dataclass(frozen=True)
class TraceCheck:
    valid: bool
    failing_step: int | None = None
    reason: str = ""
    root_count: int = 0
    cost: int = 0
    acyclic: bool = True
    greedy: bool = True


def weight(c: Configuration, r: int, dm: DistanceMap) -> Fraction:
    if dm.source != r:
        raise ValueError("distance map is not rooted at r")
    return sum((Fraction(k, 2 ** dm.dist[v]) for v, k in enumerate(c.counts) if k), Fraction(0))


def _digraph_acyclic(n: int, arcs: Iterable[tuple[int, int]]) -> bool:
    out: list[set[int]] = [set() for _ in range(n)]
    indeg = [0] * n
    for u, v in set(arcs):
        out[u].add(v)
        indeg[v] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    return seen == n


def verify_trace(
    g: Graph, c: Configuration, r: int, trace: SolutionTrace | Sequence[tuple[int, int]], t: int = 1
) -> TraceCheck:
    """Replay ``trace`` from ``c`` and report validity plus structural diagnostics."""
    steps = trace.steps if isinstance(trace, SolutionTrace) else tuple(tuple(s) for s in trace)
    dist = bfs_distances(g, r).dist
    counts = list(c.counts)
    greedy = True
    for i, (u, v) in enumerate(steps):
        if not g.has_edge(u, v):
            return TraceCheck(False, i, f"({u}, {v}) is not an edge")
        if counts[u] < 2:
            return TraceCheck(False, i, f"vertex {u} holds {counts[u]} pebbles")
        counts[u] -= 2
        counts[v] += 1
        if dist[v] >= dist[u]:
            greedy = False
    acyclic = _digraph_acyclic(g.n, steps)
    cost = len(steps) + t
    if counts[r] < t:
        return TraceCheck(False, None, f"root holds {counts[r]} < {t}", counts[r], cost, acyclic, greedy)
    return TraceCheck(True, None, "", counts[r], cost, acyclic, greedy)


class Solver:
    """Memoised solvability search for a fixed graph, root and target.

    Results are cached across calls, so deciding many related configurations
    (as :func:`exact_pebbling_number` does) reuses earlier work.
    """

    def __init__(self, g: Graph, r: int, t: int = 1, *, state_budget: int = DEFAULT_STATE_BUDGET):
        if t < 1:
            raise ValueError("t must be at least 1")
        self.g = g
        self.r = r
        self.t = t
        self.state_budget = state_budget
        dm = bfs_distances(g, r)
        self.dist = dm.dist
        self.ecc = dm.ecc
        # scaled weights: a pebble at distance d is worth 2**(ecc - d)
        self.unit = [1 << (self.ecc - d) for d in self.dist]
        self.full = 1 << self.ecc
        self.parent = [-1] * g.n
        for v in range(g.n):
            if v != r:
                self.parent[v] = min(u for u in g.adj[v] if self.dist[u] == self.dist[v] - 1)
        # candidate moves per source, greedy ones first, root-ward first
        self.moves: list[tuple[int, ...]] = []
        for u in range(g.n):
            if u == r:
                self.moves.append(())
                continue
            nb = sorted(g.adj[u], key=lambda v: (self.dist[v] - self.dist[u], v))
            self.moves.append(tuple(nb))
        # sources ordered far from the root first
        self.order = sorted((v for v in range(g.n) if v != r), key=lambda v: (-self.dist[v], v))
        self.dead: set[tuple[int, ...]] = set()
        self.good: dict[tuple[int, ...], tuple[int, int] | None] = {}
        self.states = 0
        self.pruned = 0

    # -- quick sufficient test: greedy flow along a BFS tree
    def _tree_flow(self, counts: list[int]) -> int:
        carried = list(counts)
        for v in self.order:
            p = self.parent[v]
            carried[p] += carried[v] >> 1
        return carried[self.r]

    def _tree_flow_steps(self, counts: list[int]) -> list[tuple[int, int]]:
        carried = list(counts)
        steps: list[tuple[int, int]] = []
        for v in self.order:
            p = self.parent[v]
            k = carried[v] >> 1
            carried[p] += k
            steps.extend([(v, p)] * k)
        return steps

    def _key(self, counts: list[int]) -> tuple[int, ...]:
        key = list(counts)
        if key[self.r] > self.t:
            key[self.r] = self.t
        return tuple(key)

    def _search(self, counts: list[int], w: int) -> bool:
        r, t = self.r, self.t
        if counts[r] >= t:
            return True
        if w < (t - counts[r]) * self.full:
            self.pruned += 1
            return False
        key = self._key(counts)
        if key in self.dead:
            return False
        if key in self.good:
            return True
        self.states += 1
        if self.states > self.state_budget:
            raise BudgetExceeded(f"more than {self.state_budget} states explored")
        if self._tree_flow(counts) >= t:
            self.good[key] = None
            return True
        unit = self.unit
        for u in self.order:
            cu = counts[u]
            if cu < 2:
                continue
            for v in self.moves[u]:
                counts[u] = cu - 2
                counts[v] += 1
                ok = self._search(counts, w - 2 * unit[u] + unit[v])
                counts[v] -= 1
                counts[u] = cu
                if ok:
                    self.good[key] = (u, v)
                    return True
        self.dead.add(key)
        return False

    def solvable(self, counts: Sequence[int]) -> bool:
        counts = list(counts)
        if len(counts) != self.g.n:
            raise ValueError("configuration length does not match graph")
        w = sum(k * self.unit[v] for v, k in enumerate(counts))
        limit = sys.getrecursionlimit()
        need = sum(counts) + 100
        if need > limit:
            sys.setrecursionlimit(need)
        return self._search(counts, w)

    def trace(self, counts: Sequence[int]) -> SolutionTrace:
        """Recover the moves behind a successful :meth:`solvable` call."""
        counts = list(counts)
        if not self.solvable(counts):
            raise UnsolvableError("configuration is not solvable")
        steps: list[tuple[int, int]] = []
        while counts[self.r] < self.t:
            key = self._key(counts)
            move = self.good[key]
            if move is None:
                # the state was settled by greedy flow along the BFS tree
                steps.extend(self._tree_flow_steps(counts))
                break
            u, v = move
            counts[u] -= 2
            counts[v] += 1
            steps.append((u, v))
        return SolutionTrace(tuple(steps), self.t)

    def max_deliverable(self, counts: Sequence[int], cap: int) -> int:
        """Largest k <= cap such that k pebbles can be placed on the root."""
        best = 0
        for k in range(1, cap + 1):
            if Solver(self.g, self.r, k, state_budget=self.state_budget).solvable(counts):
                best = k
            else:
                break
        return best


def is_solvable(
    g: Graph,
    c: Configuration,
    r: int,
    t: int = 1,
    *,
    state_budget: int = DEFAULT_STATE_BUDGET,
    want_trace: bool = True,
) -> OracleVerdict:
    solver = Solver(g, r, t, state_budget=state_budget)
    ok = solver.solvable(c.counts)
    trace = solver.trace(c.counts) if ok and want_trace else None
    return OracleVerdict(ok, trace, solver.states, solver.pruned)


def max_deliverable(g: Graph, c: Configuration, r: int, *, state_budget: int = DEFAULT_STATE_BUDGET) -> int:
    """Most pebbles that can be stacked on ``r`` starting from ``c``."""
    dist = bfs_distances(g, r).dist
    cap = sum(k >> dist[v] if dist[v] else k for v, k in enumerate(c.counts))
    cap = max(cap, sum(k * 2 ** (max(dist) - dist[v]) for v, k in enumerate(c.counts)) >> max(dist))
    return Solver(g, r, 1, state_budget=state_budget).max_deliverable(c.counts, cap)


@dataclass
class _Enumeration:
    solver: Solver
    verts: list[int]
    caps: list[int]
    total_budget: int
    best: int = -1
    best_config: tuple[int, ...] | None = None
    checks: int = 0

    def unsolvable(self, counts: list[int]) -> bool:
        self.checks += 1
        if self.solver.states > self.total_budget:
            raise BudgetExceeded(f"more than {self.total_budget} states explored")
        return not self.solver.solvable(counts)

    def largest_at(self, counts: list[int], v: int) -> int:
        """Largest value at v keeping ``counts`` unsolvable (counts[v] is 0 on entry)."""
        lo, hi = 0, self.caps[v]
        while lo < hi:
            mid = (lo + hi + 1) // 2
            counts[v] = mid
            if self.unsolvable(counts):
                lo = mid
            else:
                hi = mid - 1
        counts[v] = 0
        return lo


def _max_unsolvable(
    solver: Solver, caps: list[int], total_budget: int, hint: int | None
) -> tuple[int, tuple[int, ...]] | None:
    """Largest size of an unsolvable configuration with counts under ``caps``.

    Branch and bound over the non-root vertices, far ones first.  For a
    fixed prefix, each remaining vertex can hold at most the largest value
    it could take on its own (unsolvability is closed under removing
    pebbles), and the sum of those is the bound.  With a hint only
    configurations of size at least ``hint - 1`` are looked for; ``None``
    means there is none.
    """
    verts = [v for v in solver.order if caps[v] > 0]
    en = _Enumeration(solver, verts, caps, total_budget)
    counts = [0] * solver.g.n
    floor = -1 if hint is None else hint - 1

    def beaten(bound: int) -> bool:
        if en.best_config is None:
            return bound < floor
        return bound <= en.best

    def rec(i: int, size: int) -> None:
        if i == len(verts):
            if en.best_config is None or size > en.best:
                en.best = size
                en.best_config = tuple(counts)
            return
        tops = [en.largest_at(counts, v) for v in verts[i:]]
        rest = sum(tops) - tops[0]
        if beaten(size + tops[0] + rest):
            return
        v = verts[i]
        for x in range(tops[0], -1, -1):
            if beaten(size + x + rest):
                break
            counts[v] = x
            rec(i + 1, size + x)
        counts[v] = 0

    rec(0, 0)
    if en.best_config is None:
        return None
    return en.best, en.best_config


def max_unsolvable_configuration(
    g: Graph,
    r: int,
    t: int = 1,
    *,
    hint: int | None = None,
    state_budget: int = DEFAULT_STATE_BUDGET,
    total_budget: int = DEFAULT_TOTAL_BUDGET,
) -> Configuration:
    """A t-fold r-unsolvable configuration of maximum size.

    ``hint`` is a guess for the pebbling number; when correct it lets the
    search skip branches that cannot beat ``hint - 1``.  The returned
    configuration is always a genuine witness, and the search is exhaustive
    regardless of the hint.
    """
    best_size = -1
    best: tuple[int, ...] | None = None
    dist = bfs_distances(g, r).dist
    for at_root in range(t - 1, -1, -1):
        need = t - at_root
        solver = Solver(g, r, need, state_budget=state_budget)
        caps = [need * (1 << dist[v]) - 1 for v in range(g.n)]
        caps[r] = 0
        found = None
        if hint is not None:
            found = _max_unsolvable(solver, caps, total_budget, hint - at_root)
        if found is None:
            found = _max_unsolvable(solver, caps, total_budget, None)
        assert found is not None
        size, cfg = found
        if size + at_root > best_size:
            best_size = size + at_root
            vec = list(cfg)
            vec[r] = at_root
            best = tuple(vec)
    assert best is not None
    return Configuration(best)


def exact_pebbling_number(
    g: Graph,
    r: int,
    t: int = 1,
    *,
    hint: int | None = None,
    state_budget: int = DEFAULT_STATE_BUDGET,
    total_budget: int = DEFAULT_TOTAL_BUDGET,
) -> int:
    cfg = max_unsolvable_configuration(
        g, r, t, hint=hint, state_budget=state_budget, total_budget=total_budget
    )
    return cfg.size + 1


def min_cost_solution(
    g: Graph, c: Configuration, r: int, *, state_budget: int = DEFAULT_STATE_BUDGET
) -> SolutionTrace:
    """A single-pebble r-solution with the fewest steps, hence the least cost.

    Iterative deepening on the number of steps.  A solution needs at least
    ``2**d - 1`` steps when the nearest pebble sits at distance ``d``.
    """
    dist = bfs_distances(g, r).dist
    counts = list(c.counts)
    if counts[r] >= 1:
        return SolutionTrace((), 1)
    if not Solver(g, r, 1, state_budget=state_budget).solvable(counts):
        raise UnsolvableError("configuration is not r-solvable")
    occupied = [dist[v] for v, k in enumerate(counts) if k]
    depth = (1 << min(occupied)) - 1
    explored = 0
    # failed[state] = largest remaining step allowance already refuted
    failed: dict[tuple[int, ...], int] = {}
    order = sorted((v for v in range(g.n) if v != r), key=lambda v: (-dist[v], v))
    steps: list[tuple[int, int]] = []

    def dfs(left: int) -> bool:
        nonlocal explored
        if counts[r] >= 1:
            return True
        if left == 0:
            return False
        key = tuple(counts)
        if failed.get(key, -1) >= left:
            return False
        explored += 1
        if explored > state_budget:
            raise BudgetExceeded(f"more than {state_budget} states explored")
        for u in order:
            cu = counts[u]
            if cu < 2:
                continue
            for v in g.adj[u]:
                counts[u] = cu - 2
                counts[v] += 1
                steps.append((u, v))
                if dfs(left - 1):
                    return True
                steps.pop()
                counts[v] -= 1
                counts[u] = cu
        failed[key] = left
        return False

    limit = sys.getrecursionlimit()
    if sum(counts) + 100 > limit:
        sys.setrecursionlimit(sum(counts) + 100)
    while True:
        if dfs(depth):
            return SolutionTrace(tuple(steps), 1)
        depth += 1
