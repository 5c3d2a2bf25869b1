"""Undirected simple graphs, pebble configurations and the basic traversals.

Vertices are dense integers ``0..n-1``.  Every other module consumes the
:class:`Graph` defined here, so it is kept deliberately small: an immutable
adjacency table plus a handful of derived views.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence


class GraphError(ValueError):
    """Base class for graph construction and traversal errors."""


class GraphFormatError(GraphError):
    """Raised for malformed graph or configuration files."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
        *,
        check: bool = True,
    ) -> "Graph":
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if check:
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
                if u == v:
                    raise GraphError(f"loop at vertex {u}")
            nbrs[u].append(v)
            nbrs[v].append(u)
        adj = []
        for v, lst in enumerate(nbrs):
            lst.sort()
            if check:
                for a, b in zip(lst, lst[1:]):
                    if a == b:
                        raise GraphError(f"duplicate edge ({min(v, a)}, {max(v, a)})")
            adj.append(tuple(lst))
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @cached_property
    def adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nb in enumerate(self.adj):
            for v in nb:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjsets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def name(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    def vertex(self, token: str | int) -> int:
        """Resolve a vertex given as an id or as a label."""
        if isinstance(token, int):
            v = token
        elif self.labels is not None and token in self.labels:
            return self.labels.index(token)
        else:
            try:
                v = int(token)
            except ValueError:
                raise GraphError(f"unknown vertex {token!r}") from None
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} outside 0..{self.n - 1}")
        return v

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        gone = {frozenset(e) for e in removed}
        for e in gone:
            u, v = tuple(e)
            if not self.has_edge(u, v):
                raise GraphError(f"no edge ({u}, {v}) to remove")
        adj = tuple(
            tuple(v for v in nb if frozenset((u, v)) not in gone) for u, nb in enumerate(self.adj)
        )
        return Graph(self.n, adj, self.labels)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep``; returns it with the new-to-old id map.

        New ids follow increasing old ids, so the relabelling is monotone.
        """
        old = sorted(set(keep))
        new_of = {v: i for i, v in enumerate(old)}
        adj = tuple(tuple(new_of[w] for w in self.adj[v] if w in new_of) for v in old)
        labels = tuple(self.labels[v] for v in old) if self.labels is not None else None
        return Graph(len(old), adj, labels), old

    def without_vertices(self, removed: Iterable[int]) -> tuple["Graph", list[int]]:
        gone = set(removed)
        return self.induced(v for v in range(self.n) if v not in gone)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        if self.labels is not None:
            lines.extend(f"label {i} {name}" for i, name in enumerate(self.labels))
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Configuration:
    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise ValueError("pebble counts must be non-negative")

    @classmethod
    def zeros(cls, n: int) -> "Configuration":
        return cls((0,) * n)

    @classmethod
    def from_mapping(cls, n: int, counts: Mapping[int, int]) -> "Configuration":
        vec = [0] * n
        for v, c in counts.items():
            vec[v] += c
        return cls(tuple(vec))

    @property
    def size(self) -> int:
        return sum(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, v: int) -> int:
        return self.counts[v]

    def plus(self, v: int, k: int = 1) -> "Configuration":
        vec = list(self.counts)
        vec[v] += k
        return Configuration(tuple(vec))

    def restrict(self, old_ids: Sequence[int]) -> "Configuration":
        """Configuration on a subgraph given by its new-to-old id map."""
        return Configuration(tuple(self.counts[v] for v in old_ids))

    def __add__(self, other: "Configuration") -> "Configuration":
        if len(other) != len(self):
            raise ValueError("configurations on different vertex sets")
        return Configuration(tuple(a + b for a, b in zip(self.counts, other.counts)))


@dataclass(frozen=True)
class DistanceMap:
    source: int
    dist: tuple[int, ...]

    @property
    def ecc(self) -> int:
        return max(self.dist)


@dataclass(frozen=True)
class BlockStructure:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    # (block index, cut vertex) incidences of the block-cut tree
    block_tree: tuple[tuple[int, int], ...]
    vertex_blocks: tuple[tuple[int, ...], ...]

    @property
    def b(self) -> int:
        return len(self.blocks)


def parse_graph(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphFormatError("expected header 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError("non-integer header", lineno) from None
            if n < 1 or m < 0:
                raise GraphFormatError("header needs n >= 1 and m >= 0", lineno)
            header = (n, m)
            continue
        n, m = header
        if parts[0] == "label":
            if len(parts) != 3:
                raise GraphFormatError("expected 'label i name'", lineno)
            try:
                i = int(parts[1])
            except ValueError:
                raise GraphFormatError("non-integer label id", lineno) from None
            if not 0 <= i < n:
                raise GraphFormatError(f"label id {i} outside 0..{n - 1}", lineno)
            if i in labels:
                raise GraphFormatError(f"vertex {i} labelled twice", lineno)
            labels[i] = parts[2]
            continue
        if labels:
            raise GraphFormatError("edge line after label lines", lineno)
        if len(parts) != 2:
            raise GraphFormatError("expected edge 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("non-integer vertex id", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id outside 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"loop edge at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphFormatError("missing header 'n m'")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    names = None
    if labels:
        names = [labels.get(i, str(i)) for i in range(n)]
        if len(set(names)) != n:
            raise GraphFormatError("vertex labels are not unique")
    return Graph.from_edges(n, edges, names, check=False)


def parse_configuration(text: str, g: Graph) -> Configuration:
    counts = [0] * g.n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError("expected 'vertex count'", lineno)
        try:
            v = g.vertex(parts[0])
            c = int(parts[1])
        except (GraphError, ValueError) as exc:
            raise GraphFormatError(str(exc), lineno) from None
        if c < 0:
            raise GraphFormatError("negative pebble count", lineno)
        counts[v] += c
    return Configuration(tuple(counts))


def configuration_to_text(c: Configuration) -> str:
    return "".join(f"{v} {k}\n" for v, k in enumerate(c.counts) if k)


def bfs_distances(g: Graph, source: int) -> DistanceMap:
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} outside 0..{g.n - 1}")
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    if min(dist) < 0:
        raise DisconnectedGraphError(f"vertex {dist.index(-1)} unreachable from {source}")
    return DistanceMap(source, tuple(dist))


def is_connected(g: Graph) -> bool:
    try:
        bfs_distances(g, 0)
    except DisconnectedGraphError:
        return False
    return True


def diameter(g: Graph) -> int:
    return max(bfs_distances(g, v).ecc for v in range(g.n))


def blocks_and_cut_vertices(g: Graph) -> BlockStructure:
    """Biconnected components by one iterative depth-first pass with low-links.

    A bridge is its own two-vertex block.  Blocks are ordered by their
    smallest vertex id.
    """
    n = g.n
    if n == 1:
        return BlockStructure((frozenset([0]),), frozenset(), (), ((0,),))
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    disc[0] = low[0] = 0
    timer = 1
    # frames: (vertex, parent, next neighbour index)
    stack = [[0, -1, 0]]
    while stack:
        frame = stack[-1]
        u, parent, i = frame
        nb = adj[u]
        if i < len(nb):
            frame[2] = i + 1
            v = nb[i]
            if disc[v] < 0:
                edge_stack.append((u, v))
                disc[v] = low[v] = timer
                timer += 1
                stack.append([v, u, 0])
            elif v != parent and disc[v] < disc[u]:
                edge_stack.append((u, v))
                if disc[v] < low[u]:
                    low[u] = disc[v]
            continue
        stack.pop()
        if parent < 0:
            continue
        if low[u] < low[parent]:
            low[parent] = low[u]
        if low[u] >= disc[parent]:
            comp: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                comp.add(a)
                comp.add(b)
                if (a, b) == (parent, u):
                    break
            found.append(frozenset(comp))
    if min(disc) < 0:
        raise DisconnectedGraphError(f"vertex {disc.index(-1)} unreachable from 0")
    found.sort(key=min)
    vertex_blocks: list[list[int]] = [[] for _ in range(n)]
    for bi, block in enumerate(found):
        for v in block:
            vertex_blocks[v].append(bi)
    cuts = frozenset(v for v in range(n) if len(vertex_blocks[v]) > 1)
    tree = tuple((bi, v) for v in sorted(cuts) for bi in vertex_blocks[v])
    return BlockStructure(tuple(found), cuts, tree, tuple(tuple(b) for b in vertex_blocks))


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    sets = g.adjsets
    for i, u in enumerate(vs):
        su = sets[u]
        for w in vs[i + 1:]:
            if w not in su:
                return False
    return True


def is_simplicial(g: Graph, v: int) -> bool:
    nb = g.adj[v]
    sets = g.adjsets
    need = len(nb) - 1
    for u in nb:
        if len(g.adj[u]) < need:
            return False
    for i, u in enumerate(nb):
        su = sets[u]
        for w in nb[i + 1:]:
            if w not in su:
                return False
    return True


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if is_simplicial(g, v))


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g`` minus ``removed``, each sorted, ordered by min id."""
    gone = set(removed)
    seen = [False] * g.n
    for v in gone:
        seen[v] = True
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(comp)
    return out
