"""Command-line front end: ``compute``, ``verify``, ``sweep`` and ``families``.

Exit codes: 0 success, 1 a check failed, 2 input error, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import asdict
from pathlib import Path

from .errors import InputError, ResourceError, enumeration_cap
from .families import FAMILIES, FamilySpec, generate
from .graph import to_graph6
from .report import (
    CampaignConfig, Source, check_rows, compute_json, compute_row, default_profile, dumps,
    evaluate_stream, run_sweep, to_csv,
)
from .verifier import CHECK_NAMES, FAILS, resolve_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _add_sources(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="inputs", action="append", default=[], metavar="PATH",
                   help="graph file (.g6: one graph6 per line; .txt: edge list); repeatable")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int, default=0, help="subdivision vertices (subdivided_double_star)")
    p.add_argument("--pendant", type=int, default=0, help="pendant path length (subdivided_double_star)")
    p.add_argument("--p", type=float, default=0.5, help="edge probability (gnp)")
    p.add_argument("--count", type=int, default=1, help="graphs to draw (gnp, mop_random)")
    p.add_argument("--seed", type=int, default=0)


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--cap", type=int, help="enumeration cap (default $CYCLECHAIN_CAP or 20, max 28)")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclechain", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="all twelve chain parameters plus invariants")
    _add_sources(c)
    _add_output(c)

    v = sub.add_parser("verify", help="run named checks")
    _add_sources(v)
    _add_output(v)
    v.add_argument("--checks", default="all", help=f"comma list or 'all' ({', '.join(CHECK_NAMES)})")
    v.add_argument("--fail-fast", action="store_true")

    s = sub.add_parser("sweep", help="campaign over many graphs, aggregate summary")
    _add_sources(s)
    _add_output(s)
    s.add_argument("--config", help="JSON campaign file")
    s.add_argument("--checks", default="all")
    s.add_argument("--fail-fast", action="store_true")
    s.add_argument("--corpus", help="directory for counterexample graph6 files")

    f = sub.add_parser("families", help="list families or emit generated graphs as graph6")
    _add_sources(f)
    f.add_argument("--out")
    return parser


def _sources(args: argparse.Namespace) -> list[Source]:
    out = [Source(path=p) for p in args.inputs]
    if args.family:
        out.append(Source(spec=FamilySpec(args.family, n=args.n, s=args.s, p=args.p, count=args.count,
                                          seed=args.seed, pendant=args.pendant)))
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _items(sources: list[Source]):
    for src in sources:
        yield from src.graphs()


def cmd_compute(args: argparse.Namespace) -> int:
    sources = _sources(args)
    if not sources:
        raise InputError("give --in or --family")
    recs = list(evaluate_stream(_items(sources), None, args.cap, args.workers))
    if args.format == "csv":
        _emit(to_csv([compute_row(r) for r in recs]), args.out)
    else:
        _emit("".join(dumps(compute_json(r)) + "\n" for r in recs), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    sources = _sources(args)
    if not sources:
        raise InputError("give --in or --family")
    checks = resolve_checks(args.checks)
    recs = []
    failed = False
    for rec in evaluate_stream(_items(sources), checks, args.cap, args.workers):
        recs.append(rec)
        if any(c["status"] == FAILS for c in rec["checks"]):
            failed = True
            if args.fail_fast:
                break
    if args.format == "csv":
        _emit(to_csv([row for r in recs for row in check_rows(r)]), args.out)
    else:
        _emit("".join(dumps({"graph6": r["graph6"], "label": r["label"], "checks": r["checks"]}) + "\n"
                      for r in recs), args.out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.config:
        cfg = CampaignConfig.load(args.config)
        # explicit flags override the file
        if args.out:
            cfg.output = args.out
        if args.format != "json":
            cfg.format = args.format
        if args.cap is not None:
            cfg.cap = enumeration_cap(args.cap)
        if args.workers != 1:
            cfg.workers = args.workers
        if args.fail_fast:
            cfg.fail_fast = True
        if args.corpus:
            cfg.corpus = args.corpus
    else:
        sources = _sources(args) or default_profile(args.seed)
        cfg = CampaignConfig(sources=sources, checks=args.checks, output=args.out, format=args.format,
                             seed=args.seed, cap=args.cap, fail_fast=args.fail_fast,
                             workers=args.workers, corpus=args.corpus)
    summary, doc = run_sweep(cfg)
    if cfg.format == "csv":
        _emit(to_csv(summary.csv_rows(cfg.checks)), cfg.output)
    else:
        _emit(dumps(doc) + "\n", cfg.output)
    return EXIT_FAIL if summary.failures else EXIT_OK


def cmd_families(args: argparse.Namespace) -> int:
    sources = _sources(args)
    if not sources:
        lines = []
        for fam in FAMILIES:
            flags = FamilySpec(fam, n=5).flags
            lines.append(dumps({"family": fam, "flags_at_n5": asdict(flags)}))
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    lines = []
    for src in sources:
        for g, flags in src.graphs():
            lines.append(f"{to_graph6(g)}\t{g.label}\t{dumps(asdict(flags))}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "sweep": cmd_sweep, "families": cmd_families}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "cap", None) is not None:
            enumeration_cap(args.cap)
        return COMMANDS[args.command](args)
    except ResourceError as exc:
        print(f"cyclechain: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InputError as exc:
        print(f"cyclechain: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
