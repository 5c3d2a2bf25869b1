"""Named example graphs shipped with the package, plus small families."""

from __future__ import annotations

from importlib import resources

from ..graph import Graph, parse_graph

NAMES = ("diamond", "double_diamond", "fig2", "pyramid", "fig1l", "shared_fan", "splitex")


def load(name: str) -> Graph:
    name = name.lower()
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    text = resources.files(__package__).joinpath(f"{name}.graph").read_text()
    return parse_graph(text)


def path(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def star(k: int) -> Graph:
    """``K_{1,k}`` with the centre at vertex 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def spider(*legs: int) -> Graph:
    """Legs of the given lengths joined at vertex 0; each leg is numbered outwards."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)
