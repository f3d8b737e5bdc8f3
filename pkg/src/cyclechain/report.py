"""Per-graph evaluation, campaign sweeps and JSON / CSV emitters."""
from __future__ import annotations

import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import InputError
from .families import FamilyFlags, FamilySpec, generate
from .graph import Graph, parse_edge_list, parse_graph6, to_graph6
from .solver import PARAMETERS, ClassificationTable, compute_all
from .verifier import CHECK_NAMES, FAILS, HOLDS, NOT_APPLICABLE, make_context, resolve_checks, verify_all

PARAM_NAMES = tuple(p[0] for p in PARAMETERS)
INVARIANT_NAMES = ("girth", "kappa", "kappa_odd", "tau", "tau_odd", "chi", "best_two_classes",
                   "nabla", "tau_cover", "t", "gamma2")
SCHEMA_PATH = Path(__file__).with_name("report.schema.json")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------- input

def read_graphs(path: str | Path) -> list[Graph]:
    """Graphs from a file: ``.g6`` holds one graph6 string per line, ``.txt`` one edge list."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {p}: {exc.strerror}") from exc
    suffix = p.suffix.lower()
    if suffix not in (".g6", ".txt", ".edges"):
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        suffix = ".txt" if first.replace(" ", "").isdigit() and len(first.split()) == 2 else ".g6"
    if suffix == ".g6":
        out = []
        for i, ln in enumerate(text.splitlines()):
            if ln.strip():
                try:
                    out.append(parse_graph6(ln, label=f"{p.name}:{i + 1}"))
                except InputError as exc:
                    raise InputError(f"{p}: {exc}", line=i + 1) from exc
        return out
    try:
        return [parse_edge_list(text, label=p.name)]
    except InputError as exc:
        raise InputError(f"{p}: {exc}") from exc


@dataclass
class Source:
    """One entry of a campaign: a family spec or an input file."""

    spec: FamilySpec | None = None
    path: str | None = None

    def graphs(self) -> Iterator[tuple[Graph, FamilyFlags]]:
        if self.spec is not None:
            flags = self.spec.flags
            for g in generate(self.spec):
                yield g, flags
        else:
            for g in read_graphs(self.path):
                yield g, FamilyFlags()

    def as_dict(self) -> dict:
        return self.spec.as_dict() if self.spec is not None else {"path": self.path}


@dataclass
class CampaignConfig:
    sources: list[Source]
    checks: list[str] = field(default_factory=lambda: list(CHECK_NAMES))
    output: str | None = None
    format: str = "json"
    seed: int = 0
    cap: int | None = None
    fail_fast: bool = False
    workers: int = 1
    corpus: str | None = None

    def __post_init__(self) -> None:
        self.checks = resolve_checks(self.checks)
        if self.format not in ("json", "csv"):
            raise InputError(f"unknown format {self.format!r}")
        if self.cap is not None:
            from .errors import enumeration_cap
            enumeration_cap(self.cap)

    @classmethod
    def from_dict(cls, d: dict) -> "CampaignConfig":
        seed = int(d.get("seed", 0))
        sources = []
        for s in d.get("sources", []):
            if "path" in s:
                sources.append(Source(path=s["path"]))
            else:
                s = dict(s)
                s.setdefault("seed", seed)
                sources.append(Source(spec=FamilySpec.from_dict(s)))
        out = d.get("output") or {}
        if isinstance(out, str):
            out = {"path": out}
        return cls(sources=sources, checks=d.get("checks", "all"), output=out.get("path"),
                   format=out.get("format", "json"), seed=seed, cap=d.get("cap"),
                   fail_fast=bool(d.get("fail_fast", False)), workers=int(d.get("workers", 1)),
                   corpus=d.get("corpus"))

    @classmethod
    def load(cls, path: str | Path) -> "CampaignConfig":
        try:
            return cls.from_dict(json.loads(Path(path).read_text()))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot load campaign {path}: {exc}") from exc


def default_profile(seed: int = 0, gnp_count: int = 20) -> list[Source]:
    """Exhaustive labelled graphs up to 6 vertices, sampled G(n, 1/2) for 7..12."""
    out = [Source(spec=FamilySpec("all_labeled", n=n)) for n in range(1, 7)]
    out += [Source(spec=FamilySpec("gnp", n=n, p=0.5, count=gnp_count, seed=seed + n)) for n in range(7, 13)]
    return out


# ---------------------------------------------------------------- evaluation

def evaluate(item: tuple[Graph, FamilyFlags, tuple[str, ...] | None, int | None]) -> dict:
    """Compute parameters and (optionally) run checks for one graph.  Pure; used by workers."""
    g, flags, checks, cap = item
    table = ClassificationTable(g, cap)
    report = compute_all(g, cap, table=table)
    rec = report.as_dict()
    rec["label"] = g.label
    if checks is not None:
        ctx = make_context(g, flags, cap, report=report, table=table)
        rec["checks"] = [r.as_dict() for r in verify_all(g, flags, checks, context=ctx)]
    return rec


def evaluate_stream(items: Iterable[tuple[Graph, FamilyFlags]], checks: Iterable[str] | None,
                    cap: int | None, workers: int = 1) -> Iterator[dict]:
    """Results in source order regardless of ``workers``."""
    names = tuple(checks) if checks is not None else None
    jobs = ((g, f, names, cap) for g, f in items)
    if workers <= 1:
        yield from map(evaluate, jobs)
        return
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        yield from pool.map(evaluate, jobs, chunksize=64)
    finally:
        pool.shutdown(wait=True, cancel_futures=True)


# ---------------------------------------------------------------- emitters

def compute_row(rec: dict) -> dict:
    row = {"graph6": rec["graph6"], "label": rec.get("label", ""), "n": rec["n"]}
    row.update({k: rec["parameters"][k] for k in PARAM_NAMES})
    row.update({k: rec["invariants"][k] for k in INVARIANT_NAMES})
    return row


def compute_json(rec: dict) -> dict:
    return {k: rec[k] for k in ("graph6", "label", "n", "parameters", "witnesses", "invariants",
                                "chain_violations")}


def check_rows(rec: dict) -> list[dict]:
    return [{"graph6": rec["graph6"], "label": rec.get("label", ""), "check": c["check_name"],
             "status": c["status"], "tight": ";".join(c["tight"]), "note": c["note"]}
            for c in rec.get("checks", [])]


def to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


@dataclass
class SweepSummary:
    graphs: int = 0
    checks: dict[str, dict[str, int]] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    chain_violations: int = 0
    stopped_early: bool = False

    def add(self, rec: dict) -> bool:
        self.graphs += 1
        if rec["chain_violations"]:
            self.chain_violations += 1
        failed = False
        for c in rec.get("checks", []):
            bucket = self.checks.setdefault(c["check_name"],
                                            {HOLDS: 0, FAILS: 0, NOT_APPLICABLE: 0, "tight": 0})
            bucket[c["status"]] += 1
            if c["status"] == HOLDS and c["tight"]:
                bucket["tight"] += 1
            if c["status"] == FAILS:
                failed = True
                self.failures.append({"check": c["check_name"], "graph6": rec["graph6"],
                                      "label": rec.get("label", ""), "note": c["note"],
                                      "counterexample": c["counterexample"]})
        return failed

    def as_dict(self, sources: list[Source], check_names: list[str]) -> dict:
        return {
            "graphs": self.graphs,
            "sources": [s.as_dict() for s in sources],
            "checks": {k: self.checks.get(k, {HOLDS: 0, FAILS: 0, NOT_APPLICABLE: 0, "tight": 0})
                       for k in check_names},
            "failures": self.failures,
            "chain_violations": self.chain_violations,
            "stopped_early": self.stopped_early,
        }

    def csv_rows(self, check_names: list[str]) -> list[dict]:
        rows = []
        for k in check_names:
            b = self.checks.get(k, {HOLDS: 0, FAILS: 0, NOT_APPLICABLE: 0, "tight": 0})
            rows.append({"check": k, "holds": b[HOLDS], "fails": b[FAILS],
                         "not_applicable": b[NOT_APPLICABLE], "tight": b["tight"]})
        return rows


def run_sweep(cfg: CampaignConfig, log=None, quiet: bool = False) -> tuple[SweepSummary, dict]:
    """Run a campaign; returns the summary and its JSON-ready dict (no timings).

    A throughput line goes to ``log`` (stderr by default) unless ``quiet``.
    """
    t0 = time.perf_counter()
    summary = SweepSummary()

    def items():
        for src in cfg.sources:
            yield from src.graphs()

    stream = evaluate_stream(items(), cfg.checks, cfg.cap, cfg.workers)
    try:
        for rec in stream:
            if summary.add(rec) and cfg.fail_fast:
                summary.stopped_early = True
                break
    finally:
        close = getattr(stream, "close", None)
        if close:
            close()
    doc = summary.as_dict(cfg.sources, cfg.checks)
    if cfg.corpus and summary.failures:
        write_corpus(Path(cfg.corpus), summary.failures)
        doc["counterexample_dir"] = str(cfg.corpus)
    else:
        doc["counterexample_dir"] = None
    elapsed = time.perf_counter() - t0
    if not quiet:
        log = log or sys.stderr
        rate = summary.graphs / elapsed if elapsed else 0.0
        print(f"sweep: {summary.graphs} graphs in {elapsed:.2f}s ({rate:.1f} graphs/s)", file=log)
    return summary, doc


def write_corpus(directory: Path, failures: list[dict]) -> None:
    """One ``<check>.g6`` file per failing check, one graph6 line per counterexample."""
    directory.mkdir(parents=True, exist_ok=True)
    by_check: dict[str, list[str]] = {}
    for f in failures:
        by_check.setdefault(f["check"], []).append(f["counterexample"]["graph6"])
    for check, lines in sorted(by_check.items()):
        (directory / f"{check}.g6").write_text("\n".join(lines) + "\n")


def load_schema() -> dict:
    return json.loads(SCHEMA_PATH.read_text())


__all__ = [
    "CampaignConfig", "Source", "SweepSummary", "compute_json", "compute_row", "check_rows",
    "default_profile", "dumps", "evaluate", "evaluate_stream", "load_schema", "read_graphs",
    "run_sweep", "to_csv", "to_graph6", "write_corpus",
]
