from __future__ import annotations

import json

import pytest

from semi2pebbling import fixtures
from semi2pebbling.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_REJECTED, main


@pytest.fixture()
def files(tmp_path, fx):
    out = {}
    for name, g in fx.items():
        p = tmp_path / f"{name}.graph"
        p.write_text(g.to_text())
        out[name] = str(p)
    cfg = tmp_path / "blocked.cfg"
    cfg.write_text("u 3\nv 3\n")
    out["blocked"] = str(cfg)
    cfg = tmp_path / "fig2.cfg"
    cfg.write_text("x 1\nz 3\n")
    out["fig2_cfg"] = str(cfg)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_recognize(capsys, files):
    code, out, _ = run(capsys, "recognize", files["double_diamond"], "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["accepted"] and doc["b"] == 2
    code, _, err = run(capsys, "recognize", files["pyramid"])
    assert code == EXIT_REJECTED and "rejected" in err


def test_pi(capsys, files):
    code, out, _ = run(capsys, "pi", files["splitex"], "--json")
    assert code == EXIT_OK and json.loads(out)["pi"] == 35
    code, out, _ = run(capsys, "pi", files["splitex"], "--root", "r")
    assert code == EXIT_OK and "= 21" in out and "one-fan" in out
    code, out, _ = run(capsys, "pi", files["diamond"], "--root", "r", "--t", "2", "--json")
    assert json.loads(out)["pi"] == 8


def test_pi_all_roots(capsys, files):
    code, out, _ = run(capsys, "pi-all-roots", files["splitex"], "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["pi"] == 35 and len(doc["roots"]) == 10


def test_extremal(capsys, files):
    code, out, _ = run(capsys, "extremal", files["fig1l"], "--root", "r", "--check", "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["size"] == 20 and doc["check"] == {"unsolvable": True, "tight": True}


def test_oracle(capsys, files):
    code, out, _ = run(capsys, "oracle", files["pyramid"], files["blocked"], "--root", "w", "--json")
    assert code == EXIT_OK and json.loads(out)["solvable"] is False
    code, out, _ = run(capsys, "oracle", files["fig2"], files["fig2_cfg"], "--root", "r")
    assert code == EXIT_OK and out.startswith("unsolvable")
    code, _, err = run(
        capsys, "oracle", files["pyramid"], files["blocked"], "--root", "w", "--state-budget", "1"
    )
    assert code == EXIT_BUDGET and "budget" in err


def test_oracle_trace(capsys, tmp_path, files):
    cfg = tmp_path / "five.cfg"
    cfg.write_text("z 5\n")
    code, out, _ = run(capsys, "oracle", files["fig2"], str(cfg), "--root", "r", "--json")
    doc = json.loads(out)
    assert doc["solvable"] and doc["replay"]["valid"] and doc["replay"]["cost"] == 4


def test_gen_and_round_trip(capsys, tmp_path):
    target = tmp_path / "g.graph"
    code, _, _ = run(capsys, "gen", "--n", "30", "--seed", "5", "-o", str(target))
    assert code == EXIT_OK
    code, out, _ = run(capsys, "recognize", str(target), "--json")
    assert code == EXIT_OK and json.loads(out)["n"] == 30
    code, out, _ = run(capsys, "gen", "--kind", "tree", "--n", "6", "--json")
    assert json.loads(out)["m"] == 5


def test_verify_exit_code_reflects_failures(capsys):
    code, out, _ = run(capsys, "verify", "--nmax", "3", "--tmax", "1", "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["passed"]
    code, out, _ = run(capsys, "verify", "--nmax", "4", "--tmax", "1")
    assert code == EXIT_FAIL and "FAIL spine-internal" in out


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "1e3,3e3", "--repeats", "1", "--json")
    doc = json.loads(out)
    assert code in (EXIT_OK, EXIT_FAIL) and doc["checked"] == 3


def test_bad_input(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("3 2\n0 1\n0 1\n")
    code, _, err = run(capsys, "pi", str(bad))
    assert code == EXIT_FAIL and "duplicate" in err
    code, _, err = run(capsys, "pi", str(tmp_path / "missing.graph"))
    assert code == EXIT_FAIL
