"""Command-line interface: ``semi2pebbling <command> ...``.

Exit codes: 0 on success, 1 on a failed check or bad input, 2 when the graph
is not a semi-2-tree, 3 when the oracle runs out of its state budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .formulas import best_root, pebbling_number, pebbling_number_at
from .graph import Graph, GraphError, parse_configuration, parse_graph
from .instances import InstanceError, InstanceSpec, random_semi_two_tree
from .oracle import DEFAULT_STATE_BUDGET, BudgetExceeded, is_solvable, verify_trace
from .reductions import extremal_config
from .structure import RecognitionError, recognize_semi_two_tree
from .verify import CorpusBudgetError, check_scaling, verify_corpus

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_REJECTED = 2
EXIT_BUDGET = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(args: argparse.Namespace, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def _load(args: argparse.Namespace):
    g = parse_graph(_read(args.graph))
    return g, recognize_semi_two_tree(g)


def _root(g: Graph, token: str) -> int:
    return g.vertex(token)


def cmd_recognize(args: argparse.Namespace) -> int:
    g, s = _load(args)
    doc = {"accepted": True, **s.to_json()}
    text = (
        f"semi-2-tree: n={s.n} m={g.m} blocks={s.b} skeleton edges={s.e_T}\n"
        f"cut vertices: {' '.join(g.name(v) for v in sorted(s.block_structure.cut_vertices)) or '-'}\n"
        f"simplicial: {' '.join(g.name(v) for v in sorted(s.simplicial))}"
    )
    _emit(args, doc, text)
    return EXIT_OK


def cmd_pi(args: argparse.Namespace) -> int:
    g, s = _load(args)
    if args.root is None:
        ans = pebbling_number(s, args.t)
    else:
        ans = pebbling_number_at(s, _root(g, args.root), args.t)
    text = f"pi_{args.t}(G, {g.name(ans.root)}) = {ans.value}  [{ans.root_class.name}]"
    if args.root is None:
        text = f"pi_{args.t}(G) = {ans.value}  attained at {g.name(ans.root)}"
    _emit(args, ans.to_json(), text)
    return EXIT_OK


def cmd_pi_all_roots(args: argparse.Namespace) -> int:
    g, s = _load(args)
    rows = []
    for r in range(g.n):
        ans = pebbling_number_at(s, r, args.t)
        rows.append({"root": r, "name": g.name(r), "pi": ans.value, "class": ans.root_class.name})
    best, _ = best_root(s)
    top = max(row["pi"] for row in rows)
    doc = {"t": args.t, "pi": top, "best_root": best, "roots": rows}
    width = max(len(row["name"]) for row in rows)
    lines = [f"{row['name']:>{width}}  {row['pi']:>8}  {row['class']}" for row in rows]
    lines.append(f"pi_{args.t}(G) = {top}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace) -> int:
    g, s = _load(args)
    r = _root(g, args.root)
    cert = extremal_config(s, r, args.t)
    doc = cert.to_json()
    lines = [
        f"root {g.name(r)} ({cert.root_class.name}), t={args.t}: size {cert.config.size}"
        f" = pi - 1 = {cert.claimed_size}",
        "configuration: " + " ".join(f"{g.name(v)}:{k}" for v, k in enumerate(cert.config.counts) if k),
    ]
    if cert.derived:
        lines.append("note: construction confirmed by the oracle only")
    if args.check:
        budget = args.state_budget
        unsolvable = not is_solvable(g, cert.config, r, args.t, state_budget=budget, want_trace=False).solvable
        tight = all(
            is_solvable(g, cert.config.plus(v), r, args.t, state_budget=budget, want_trace=False).solvable
            for v in range(g.n)
        )
        doc["check"] = {"unsolvable": unsolvable, "tight": tight}
        lines.append(f"oracle: unsolvable={unsolvable} every one-pebble extension solvable={tight}")
        _emit(args, doc, "\n".join(lines))
        return EXIT_OK if unsolvable and tight else EXIT_FAIL
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    c = parse_configuration(_read(args.config), g)
    r = _root(g, args.root)
    verdict = is_solvable(g, c, r, args.t, state_budget=args.state_budget)
    doc: dict = {
        "root": r,
        "t": args.t,
        "config": list(c.counts),
        "solvable": verdict.solvable,
        "states_explored": verdict.states_explored,
    }
    lines = [f"{'solvable' if verdict.solvable else 'unsolvable'} for {args.t} pebble(s) at {g.name(r)}"]
    if verdict.trace is not None:
        check = verify_trace(g, c, r, verdict.trace, args.t)
        doc["trace"] = verdict.trace.to_json()
        doc["replay"] = {
            "valid": check.valid,
            "root_count": check.root_count,
            "cost": check.cost,
            "acyclic": check.acyclic,
            "greedy": check.greedy,
        }
        moves = " ".join(f"{g.name(u)}->{g.name(v)}" for u, v in verdict.trace.steps) or "(none)"
        lines.append(f"moves: {moves}")
        lines.append(f"replay valid={check.valid} cost={check.cost} acyclic={check.acyclic}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_corpus(args.nmax, args.tmax, samples=args.samples, seed=args.seed, jobs=args.jobs)
    _emit(args, report.to_json(), report.table())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_gen(args: argparse.Namespace) -> int:
    spec = InstanceSpec(
        kind=args.kind, n=args.n, seed=args.seed, blocks=args.blocks, max_block=args.max_block
    )
    g = random_semi_two_tree(spec)
    text = g.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.json:
        print(json.dumps({"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges()]}))
    elif not args.output:
        sys.stdout.write(text)
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    try:
        return [int(float(part)) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None


def cmd_bench(args: argparse.Namespace) -> int:
    res = check_scaling(args.sizes, seed=args.seed, repeats=args.repeats)
    _emit(args, res.to_json(), res.line())
    return EXIT_OK if res.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semi2pebbling", description="Exact t-fold pebbling numbers of semi-2-trees."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("recognize", cmd_recognize, "recognise a semi-2-tree and print its decomposition")
    p.add_argument("graph", help="graph file, or - for stdin")

    p = add("pi", cmd_pi, "pebbling number at a root, or of the whole graph")
    p.add_argument("graph")
    p.add_argument("--root", help="vertex id or label")
    p.add_argument("--t", type=int, default=1)

    p = add("pi-all-roots", cmd_pi_all_roots, "pebbling number at every root")
    p.add_argument("graph")
    p.add_argument("--t", type=int, default=1)

    p = add("extremal", cmd_extremal, "largest unsolvable configuration for a root")
    p.add_argument("graph")
    p.add_argument("--root", required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--check", action="store_true", help="confirm the certificate with the oracle")
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)

    p = add("oracle", cmd_oracle, "decide solvability of a configuration by exhaustive search")
    p.add_argument("graph")
    p.add_argument("config", help="configuration file with 'vertex count' lines")
    p.add_argument("--root", required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)

    p = add("verify", cmd_verify, "check every formula against the oracle on the small corpus")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--tmax", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    p = add("gen", cmd_gen, "generate a random instance")
    p.add_argument("--kind", choices=["semi_two_tree", "two_path", "tree"], default="semi_two_tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--blocks", type=int)
    p.add_argument("--max-block", type=int, default=12)
    p.add_argument("--output", "-o")

    p = add("bench", cmd_bench, "time the pebbling number on generated instances")
    p.add_argument("--sizes", type=_sizes, default=[10**4, 10**5, 10**6])
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--repeats", type=int, default=3)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RecognitionError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except (BudgetExceeded, CorpusBudgetError) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        instance = getattr(exc, "instance", None)
        if instance:
            sys.stderr.write(instance)
        return EXIT_BUDGET
    except (GraphError, InstanceError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
