from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from semi2pebbling import fixtures
from semi2pebbling.graph import Graph
from semi2pebbling.instances import InstanceSpec, random_semi_two_tree

# criterion number -> PASS/FAIL line, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def fx():
    """Fixture graphs by name, loaded once."""
    return {name: fixtures.load(name) for name in fixtures.NAMES}


@st.composite
def random_trees(draw, min_n: int = 2, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    return Graph.from_edges(n, [(p, v) for v, p in zip(range(1, n), parents)])


@st.composite
def small_semi_two_trees(draw, min_n: int = 2, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_semi_two_tree(InstanceSpec(n=n, seed=seed, max_block=6))


def random_counts(rng: random.Random, n: int, total: int) -> list[int]:
    counts = [0] * n
    for _ in range(total):
        counts[rng.randrange(n)] += 1
    return counts
