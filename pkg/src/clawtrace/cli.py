"""``clawtrace`` command line: gen, classify, find, solve, oracle, verify, report."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import TextIO

from .errors import ClawTraceError
from .generators import (
    complete_bipartite, complete_graph, cycle_graph, gen_g1, gen_g2, gen_pattern, parse_pattern,
    path_graph, petersen_graph, random_connected,
)
from .graph import Graph, read_graph, write_edgelist, write_graph6
from .harness import SweepConfig, THEOREMS, verify_counterexamples, verify_theorems
from .heavy import DEFAULT_R, classify
from .engine import HamiltonPath, Hypothesis, solve
from .patterns import enumerate_induced, find_free_violation
from .oracle import traceable_search

EXIT_OK, EXIT_CLAIM_FAILED, EXIT_USAGE = 0, 1, 2
FAMILIES = ("g1", "g2", "pattern", "complete", "bipartite", "path", "cycle", "petersen", "random")


def _dump(obj: object, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _load(args: argparse.Namespace) -> Graph:
    if args.graph6 is not None:
        return read_graph(args.graph6)
    if args.input in (None, "-"):
        return read_graph(sys.stdin.read())
    with open(args.input, encoding="ascii") as fh:
        return read_graph(fh.read())


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"--family {args.family} requires {', '.join(missing)}")


class _Usage(Exception):
    pass


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    fam = args.family
    if fam == "g1":
        _need(args, "k", "n")
        g = gen_g1(args.k, args.n)
    elif fam == "g2":
        _need(args, "k", "n")
        g = gen_g2(args.k, args.n)
    elif fam == "pattern":
        _need(args, "pattern")
        g = gen_pattern(parse_pattern(args.pattern))
    elif fam == "complete":
        _need(args, "n")
        g = complete_graph(args.n)
    elif fam == "bipartite":
        _need(args, "a", "b")
        g = complete_bipartite(args.a, args.b)
    elif fam == "path":
        _need(args, "n")
        g = path_graph(args.n)
    elif fam == "cycle":
        _need(args, "n")
        g = cycle_graph(args.n)
    elif fam == "petersen":
        g = petersen_graph()
    else:
        _need(args, "n")
        g = random_connected(args.n, args.p, args.seed)
    if args.json:
        _dump({"graph6": write_graph6(g), "n": g.n, "edges": [list(e) for e in g.edges()]}, out)
    elif args.format == "edgelist":
        out.write(write_edgelist(g))
    else:
        out.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    rep = classify(_load(args), args.r)
    if args.json:
        _dump(rep.to_json(), out)
    else:
        for name, val in rep.to_json()["flags"].items():
            out.write(f"{name}: {'yes' if val else 'no'}\n")
    return EXIT_OK


def cmd_find(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args)
    pid = parse_pattern(args.pattern)
    if args.all:
        embs = [e.to_json() for e in enumerate_induced(g, pid)]
        if args.json:
            _dump({"pattern": pid.name, "count": len(embs), "embeddings": embs}, out)
        else:
            for e in embs:
                out.write(" ".join(map(str, e["vertices"])) + "\n")
        return EXIT_OK
    emb = find_free_violation(g, pid)
    if args.json:
        _dump({"pattern": pid.name, "free": emb is None, "embedding": emb.to_json() if emb else None}, out)
    else:
        out.write("free\n" if emb is None else "found " + " ".join(map(str, emb.vertices)) + "\n")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    res = solve(_load(args), args.hypothesis)
    if args.json:
        _dump(res.to_json(), out)
    else:
        data = res.to_json()
        out.write(data["outcome"])
        if isinstance(res, HamiltonPath):
            out.write(" " + " ".join(map(str, res.path)))
        out.write("\n")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, out: TextIO) -> int:
    res = traceable_search(_load(args), args.budget_ms, args.method)
    if args.json:
        _dump(res.to_json(), out)
    else:
        out.write(res.status + (" " + " ".join(map(str, res.path)) if res.path else "") + "\n")
    return EXIT_OK


def _config(args: argparse.Namespace) -> SweepConfig:
    return SweepConfig(
        exhaustive_max_n=args.exhaustive_max_n,
        sample_count=args.sample_count,
        sample_min_n=args.sample_min_n,
        sample_max_n=args.sample_max_n,
        seed=args.seed,
    )


def _sweep(args: argparse.Namespace, theorems: list[int]) -> tuple[dict, bool]:
    if args.csv:
        fh = open(args.csv, "w", newline="", encoding="ascii")
        cols = ["source", "index", "n", "graph6", "oracle"]
        for t in theorems:
            cols += [f"h_{THEOREMS[t][0]}", f"t{t}"]
        writer = csv.DictWriter(fh, fieldnames=cols, restval="")
        writer.writeheader()
        on_row = writer.writerow
    else:
        fh, on_row = None, None
    try:
        reports = verify_theorems(theorems, _config(args), on_row)
    finally:
        if fh is not None:
            fh.close()
    data = {str(t): rep.to_json(timing=args.timing) for t, rep in reports.items()}
    for rep in reports.values():
        logging.info("theorem %d: %.1f s", rep.theorem, rep.wall_time_s)
    return data, all(rep.passed for rep in reports.values())


def _summary(out: TextIO, data: dict) -> None:
    for key, rep in data.items():
        if "claims" in rep:
            for c in rep["claims"]:
                out.write(f"{'PASS' if c['passed'] else 'FAIL'} {c['id']}\n")
        else:
            t = rep["totals"]
            out.write(
                f"{'PASS' if rep['passed'] else 'FAIL'} theorem {key}: population={t['population']} "
                f"certified={t['certified']} paths={t['solved_with_path']} violations={t['violations']} "
                f"unresolved={t['unresolved']} oracle_disagreements={t['oracle_disagreements']}\n"
            )


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.counterexamples == (args.theorem is not None):
        raise _Usage("verify needs exactly one of --theorem or --counterexamples")
    if args.counterexamples:
        rep = verify_counterexamples()
        data, ok = {"counterexamples": rep.to_json()}, rep.passed
    else:
        data, ok = _sweep(args, [args.theorem])
    if args.json:
        _dump(data if args.counterexamples else data[str(args.theorem)], out)
    else:
        _summary(out, data)
    return EXIT_OK if ok else EXIT_CLAIM_FAILED


def cmd_report(args: argparse.Namespace, out: TextIO) -> int:
    data, ok = _sweep(args, sorted(THEOREMS))
    ce = verify_counterexamples()
    data["counterexamples"] = ce.to_json()
    ok = ok and ce.passed
    if args.json:
        _dump(data, out)
    else:
        _summary(out, data)
    return EXIT_OK if ok else EXIT_CLAIM_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clawtrace", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        src = p.add_mutually_exclusive_group()
        src.add_argument("--in", dest="input", metavar="FILE", help="graph6 or edge-list file; '-' for stdin (default)")
        src.add_argument("--graph6", metavar="STR", help="graph6 string given inline")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--budget-ms", type=float, default=1000.0)

    p = sub.add_parser("gen", help="generate a graph")
    common(p)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--pattern")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("classify", help="evaluate every hypothesis flag")
    common(p)
    graph_input(p)
    p.add_argument("--r", type=int, default=DEFAULT_R)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("find", help="find an induced copy of a pattern")
    common(p)
    graph_input(p)
    p.add_argument("--pattern", required=True)
    p.add_argument("--all", action="store_true", help="list every induced copy")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("solve", help="Hamilton path or hypothesis violation")
    common(p)
    graph_input(p)
    p.add_argument("--hypothesis", choices=[h.value for h in Hypothesis], default="auto")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="ground-truth traceability")
    common(p)
    graph_input(p)
    p.add_argument("--method", choices=("auto", "dp", "backtrack"), default="auto")
    p.set_defaults(func=cmd_oracle)

    def sweep_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--exhaustive-max-n", type=int, default=6)
        p.add_argument("--sample-count", type=int, default=0)
        p.add_argument("--sample-min-n", type=int, default=8)
        p.add_argument("--sample-max-n", type=int, default=14)
        p.add_argument("--csv", metavar="FILE", help="write one CSV row per graph")
        p.add_argument("--timing", action="store_true", help="include wall time in JSON (breaks byte-identity)")

    p = sub.add_parser("verify", help="theorem sweep or counterexample checklist")
    common(p)
    p.add_argument("--theorem", type=int, choices=sorted(THEOREMS))
    p.add_argument("--counterexamples", action="store_true")
    sweep_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="all sweeps plus the counterexample checklist")
    common(p)
    sweep_opts(p)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except (_Usage, ClawTraceError, OSError, UnicodeDecodeError) as exc:
        print(f"clawtrace {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
