"""Acceptance criteria 1 to 8, each at zero tolerance.

Every test records one PASS/FAIL line; the lines are printed together in an
"acceptance criteria" section at the end of the pytest run.  The numbers come
from the same ``check_*`` functions that the ``verify`` command runs.
"""

from __future__ import annotations

import pytest

from semi2pebbling import verify

from .conftest import ACCEPTANCE_LINES


def record(criterion: int, title: str, *results: verify.CheckResult, verdict: bool | None = None) -> None:
    ok = all(r.passed for r in results) if verdict is None else verdict
    detail = "; ".join(r.line() for r in results)
    ACCEPTANCE_LINES[criterion] = f"{'PASS' if ok else 'FAIL'} criterion {criterion} ({title}): {detail}"


def assert_clean(res: verify.CheckResult) -> None:
    assert res.passed, f"{res.line()}\nfirst failures: {res.failures[:3]}"
    assert res.checked > 0


def test_criterion_1_tree_formula():
    res = verify.check_tree_formula(8, (1, 2))
    record(1, "tree formula equals oracle, n <= 8, t in {1,2}", res)
    assert_clean(res)


def test_criterion_2_semi_two_tree_formula():
    res = verify.check_semi_formula(7, (1, 2))
    record(2, "semi-2-tree formula equals oracle at every root, n <= 7", res)
    assert_clean(res)


def test_criterion_3_extremal_certificates():
    res = verify.check_extremal(7, 9, (1, 2))
    record(3, "extremal certificates are tight, plus 2-paths n <= 9", res)
    assert_clean(res)


@pytest.fixture(scope="module")
def best_root_results():
    return verify.check_best_root(7, (1, 2)), verify.check_internal_root_strict(7, (1, 2))


def test_criterion_4_best_root(best_root_results):
    best, strict = best_root_results
    record(4, "best-root properties", best, strict)
    assert_clean(best)


def test_criterion_4_internal_roots_strictly_below(best_root_results):
    # Known to fail: on the single-fan 2-paths with 4 to 7 vertices and t = 1 the
    # hub is spine-internal, yet every root (hub included) has value n, which the
    # oracle confirms.  The failing cases are listed in the assertion message.
    _, strict = best_root_results
    assert_clean(strict)


def test_criterion_5_removal_rewrites():
    res = verify.check_removal_rewrites(7, 200, 0)
    record(5, "junior, wart, edge and neighbour rewrites preserve solvability", res)
    assert_clean(res)


def test_criterion_6_cheap_solutions():
    res = verify.check_cheap(6, 10**5, 500, 0)
    record(6, "size-q configurations have a solution of cost <= 2^ecc", res)
    assert_clean(res)


def test_criterion_7_fixtures():
    res = verify.check_fixtures()
    record(7, "fixture values", res)
    assert_clean(res)


def test_criterion_8_linear_time():
    res = verify.check_scaling((10**4, 10**5, 10**6), seed=7, repeats=3)
    record(8, "pebbling_number time limits and fitted exponent", res)
    assert_clean(res)
