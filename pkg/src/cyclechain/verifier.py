"""Registry of named, machine-checkable bound / lemma / characterization checks.

Every check maps a graph (plus its parameter report, classification table and
family flags) to a :class:`CheckResult`.  Mathematical violations are data,
never exceptions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import InputError
from .families import FamilyFlags
from .graph import Graph, bits, is_bipartite, parse_graph6, popcount, to_graph6
from .predicates import PredicateKind
from .solver import CY_CHAIN, ODD_CHAIN, ClassificationTable, ParameterReport, compute_all

K = PredicateKind

HOLDS, FAILS, NOT_APPLICABLE = "holds", "fails", "not_applicable"


@dataclass
class CheckResult:
    check_name: str
    status: str
    values: dict[str, int] = field(default_factory=dict)
    tight: list[str] = field(default_factory=list)
    counterexample: dict | None = None
    note: str = ""
    literal: dict | None = None

    def as_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "status": self.status,
            "values": dict(self.values),
            "tight": list(self.tight),
            "counterexample": self.counterexample,
            "note": self.note,
            "literal": self.literal,
        }


@dataclass
class Context:
    graph: Graph
    flags: FamilyFlags
    report: ParameterReport
    table: ClassificationTable

    @property
    def p(self) -> dict[str, int]:
        return self.report.values

    @property
    def inv(self):
        return self.report.invariants

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def bipartite(self) -> bool:
        return is_bipartite(self.graph, self.graph.full)

    def cex(self, **sets: int | Iterable[int]) -> dict:
        out = {}
        for k, v in sets.items():
            out[k] = list(bits(v)) if isinstance(v, int) else [list(bits(m)) for m in v]
        return {"graph6": self.report.graph6, "sets": out}


# ---------------------------------------------------------------- path structure

def find_path_structure(g: Graph, girth_value: int) -> list[int] | None:
    """An induced path on ``girth_value - 1`` vertices such that every vertex off
    the path is adjacent to both path endpoints and to no interior path vertex.

    Returns the path (as a vertex list) or None.
    """
    k = girth_value - 1
    if k < 2 or k > g.n:
        return None
    adj = g.adj
    off_count = g.n - k

    def ok_endpoint(v: int) -> bool:
        return popcount(adj[v]) >= off_count + 1

    for start in range(g.n):
        if not ok_endpoint(start):
            continue
        stack: list[tuple[list[int], int]] = [([start], 1 << start)]
        while stack:
            seq, pmask = stack.pop()
            last = seq[-1]
            if len(seq) == k:
                if seq[0] > last:
                    continue
                off = g.full & ~pmask
                interior = pmask & ~(1 << seq[0]) & ~(1 << last)
                if all(adj[w] >> seq[0] & 1 and adj[w] >> last & 1 and not adj[w] & interior
                       for w in bits(off)):
                    return seq
                continue
            before = pmask & ~(1 << last)
            for w in bits(adj[last] & ~pmask):
                if adj[w] & before:
                    continue
                if len(seq) + 1 == k and not ok_endpoint(w):
                    continue
                stack.append((seq + [w], pmask | 1 << w))
    return None


def path_structure(g: Graph, girth_value: int) -> bool:
    return find_path_structure(g, girth_value) is not None


# ---------------------------------------------------------------- helpers

def _bounds(name: str, ctx: Context, parts: list[tuple[str, int, int]], **cex_sets) -> CheckResult:
    """Each part is (label, smaller, larger) and must satisfy smaller <= larger."""
    values: dict[str, int] = {}
    tight, broken = [], []
    for label, lo, hi in parts:
        values[f"{label}.lhs"] = lo
        values[f"{label}.rhs"] = hi
        if lo > hi:
            broken.append(f"{label}: {lo} > {hi}")
        elif lo == hi:
            tight.append(label)
    if broken:
        return CheckResult(name, FAILS, values, tight, ctx.cex(**cex_sets), "; ".join(broken))
    return CheckResult(name, HOLDS, values, tight)


def _equal(name: str, ctx: Context, label: str, a: int, b: int, **cex_sets) -> CheckResult:
    values = {f"{label}.lhs": a, f"{label}.rhs": b}
    if a != b:
        return CheckResult(name, FAILS, values, [], ctx.cex(**cex_sets), f"{label}: {a} != {b}")
    return CheckResult(name, HOLDS, values, [label])


def _characterization(name: str, ctx: Context, param: str) -> CheckResult:
    inv = ctx.inv
    if ctx.n == 0 or inv.kappa != 0:
        return CheckResult(name, NOT_APPLICABLE, note=f"kappa={inv.kappa}: some vertex lies on no cycle"
                           if ctx.n else "empty graph")
    g = inv.girth
    value = ctx.p[param]
    attained = value == g - 1
    path = find_path_structure(ctx.graph, g)
    has_path = path is not None
    values = {param: value, "girth": g, "attained": int(attained), "path_structure": int(has_path)}
    if attained and not has_path:
        return CheckResult(name, FAILS, values, [], ctx.cex(**{param: ctx.report.witnesses[param]}),
                           f"forward direction: {param} = girth-1 but no path structure")
    if has_path and not attained:
        return CheckResult(name, FAILS, values, [], ctx.cex(path=sum(1 << v for v in path)),
                           f"backward direction: path structure exists but {param}={value} != {g - 1}")
    note = f"path={path}" if path else ""
    return CheckResult(name, HOLDS, values, ["iff"] if attained else [], note=note)


def _implication(name: str, ctx: Context, src: PredicateKind, dst: PredicateKind) -> CheckResult:
    """Every extremal ``src`` set is an extremal ``dst`` set."""
    t = ctx.table
    checked = 0
    for s in range(len(t)):
        if t.extremal(src, s):
            checked += 1
            if not t.extremal(dst, s):
                return CheckResult(name, FAILS, {"sets_checked": checked}, [], ctx.cex(set=s),
                                   f"{src.value} set {list(bits(s))} is not extremal {dst.value}")
    return CheckResult(name, HOLDS, {"sets_checked": checked})


def _chain(name: str, ctx: Context, chain: tuple[str, ...]) -> CheckResult:
    parts = [(f"{a}<={b}", ctx.p[a], ctx.p[b]) for a, b in zip(chain, chain[1:])]
    wit = {k: ctx.report.witnesses[k] for k in chain}
    return _bounds(name, ctx, parts, **wit)


# ---------------------------------------------------------------- checks

def easy_bounds_cycle(ctx: Context) -> CheckResult:
    inv, p, n = ctx.inv, ctx.p, ctx.n
    r = _bounds("easy_bounds_cycle", ctx, [
        ("lower", inv.girth - 1 + inv.kappa, p["i_cy"]),
        ("middle", p["i_cy"], p["beta_cy"]),
        ("upper", p["beta_cy"], n - inv.tau),
    ], i_cy=ctx.report.witnesses["i_cy"], beta_cy=ctx.report.witnesses["beta_cy"],
        cycle_packing=inv.cycle_packing)
    if inv.girth == 1 and n and inv.kappa == n and _components(ctx.graph) > 1:
        r.note = "disconnected forest: girth=1 under the forest convention"
    return r


def _components(g: Graph) -> int:
    from .graph import component_masks
    return len(component_masks(g, g.full))


def indep_char(ctx: Context) -> CheckResult:
    return _characterization("indep_char", ctx, "i_cy")


def odd_strict(ctx: Context) -> CheckResult:
    name = "odd_strict"
    if not ctx.flags.maximal_outerplanar:
        return CheckResult(name, NOT_APPLICABLE, note="not flagged maximal-outerplanar")
    if ctx.inv.chi != 3:
        return CheckResult(name, NOT_APPLICABLE, note=f"chi={ctx.inv.chi} != 3")
    if ctx.n % 3 == 0:
        return CheckResult(name, NOT_APPLICABLE, note=f"n={ctx.n} is a multiple of 3")
    a, b = ctx.p["i_odd"], ctx.p["beta_odd"]
    values = {"i_odd": a, "beta_odd": b}
    if a < b:
        return CheckResult(name, HOLDS, values)
    return CheckResult(name, FAILS, values, [], ctx.cex(i_odd=ctx.report.witnesses["i_odd"]),
                       f"i_odd={a} not < beta_odd={b}")


def odd_indep_bound1(ctx: Context) -> CheckResult:
    inv, p, n = ctx.inv, ctx.p, ctx.n
    if ctx.bipartite:
        return _equal("odd_indep_bound1", ctx, "bipartite:i_odd=n", p["i_odd"], n,
                      i_odd=ctx.report.witnesses["i_odd"])
    return _bounds("odd_indep_bound1", ctx, [
        ("lower", inv.kappa_odd + inv.girth - 1, p["i_odd"]),
        ("upper", p["i_odd"], n - inv.tau_odd),
    ], i_odd=ctx.report.witnesses["i_odd"], odd_cycle_packing=inv.odd_cycle_packing)


def _chromatic_lower(ctx: Context, name: str, param: str) -> CheckResult:
    """2*floor(n/chi) <= param <= n - tau_odd.

    The colour-class lower bound needs two colour classes; for chi < 2 it is
    skipped and its literal value is reported separately.
    """
    inv, p, n = ctx.inv, ctx.p, ctx.n
    parts = [("upper", p[param], n - inv.tau_odd)]
    literal = None
    if inv.chi >= 2:
        parts.insert(0, ("lower", 2 * (n // inv.chi), p[param]))
    elif n:
        lit = 2 * (n // inv.chi)
        literal = {"reading": "2*floor(n/chi) with chi=1", "lhs": lit, "rhs": p[param],
                   "holds": lit <= p[param]}
    r = _bounds(name, ctx, parts, **{param: ctx.report.witnesses[param]},
                odd_cycle_packing=inv.odd_cycle_packing)
    if inv.chi < 2:
        r.note = (f"chi={inv.chi}: colour-class lower bound skipped (needs two colour classes)"
                  + (r.note and "; " + r.note))
        r.literal = literal
    return r


def odd_indep_bound2(ctx: Context) -> CheckResult:
    return _chromatic_lower(ctx, "odd_indep_bound2", "beta_odd")


def mop_beta(ctx: Context) -> CheckResult:
    if not ctx.flags.maximal_outerplanar:
        return CheckResult("mop_beta", NOT_APPLICABLE, note="not flagged maximal-outerplanar")
    return _equal("mop_beta", ctx, "beta_odd=best_two_classes", ctx.p["beta_odd"],
                  ctx.inv.best_two_classes, beta_odd=ctx.report.witnesses["beta_odd"])


def kral_voss(ctx: Context) -> CheckResult:
    inv, p, n = ctx.inv, ctx.p, ctx.n
    parts = [("general", p["beta_odd"], n - inv.tau_odd), ("cover>=packing", inv.tau_odd, inv.tau_cover)]
    if ctx.flags.planar:
        parts.append(("planar", n - 2 * inv.tau_odd, p["beta_odd"]))
    r = _bounds("kral_voss", ctx, parts, beta_odd=ctx.report.witnesses["beta_odd"],
                odd_cycle_packing=inv.odd_cycle_packing)
    if not ctx.flags.planar:
        r.note = ("planar part not evaluated: not flagged planar" + (r.note and "; " + r.note))
    return r


def two_tuple(ctx: Context) -> CheckResult:
    return _bounds("two_tuple", ctx, [("gamma2<=gamma_cy", ctx.inv.gamma2, ctx.p["gamma_cy"])],
                   gamma_cy=ctx.report.witnesses["gamma_cy"], gamma2=ctx.inv.gamma2_set)


def cy_dom_bound(ctx: Context) -> CheckResult:
    inv = ctx.inv
    return _bounds("cy_dom_bound", ctx, [("lower", inv.girth - 1 + inv.kappa, ctx.p["gamma_cy"])],
                   gamma_cy=ctx.report.witnesses["gamma_cy"])


def cy_dom_char(ctx: Context) -> CheckResult:
    return _characterization("cy_dom_char", ctx, "gamma_cy")


def cy_chain(ctx: Context) -> CheckResult:
    return _chain("cy_chain", ctx, CY_CHAIN)


def odd_chain(ctx: Context) -> CheckResult:
    return _chain("odd_chain", ctx, ODD_CHAIN)


def lemma_cy2(ctx: Context) -> CheckResult:
    return _implication("lemma_cy2", ctx, K.CycleIndependent, K.CycleDominating)


def lemma_indep_dom(ctx: Context) -> CheckResult:
    return _implication("lemma_indep_dom", ctx, K.OddCycleIndependent, K.OddCycleDominating)


def lemma_dom_irr(ctx: Context) -> CheckResult:
    return _implication("lemma_dom_irr", ctx, K.OddCycleDominating, K.OddCycleIrredundant)


def lemma_cy_dom_irr(ctx: Context) -> CheckResult:
    return _implication("lemma_cy_dom_irr", ctx, K.CycleDominating, K.CycleIrredundant)


def gamma_odd_upper(ctx: Context) -> CheckResult:
    return _chromatic_lower(ctx, "gamma_odd_upper", "Gamma_odd")


def gamma_odd_lower(ctx: Context) -> CheckResult:
    inv, p, n = ctx.inv, ctx.p, ctx.n
    if ctx.bipartite:
        return _equal("gamma_odd_lower", ctx, "bipartite:gamma_odd=n", p["gamma_odd"], n,
                      gamma_odd=ctx.report.witnesses["gamma_odd"])
    return _bounds("gamma_odd_lower", ctx, [
        ("lower", inv.girth - 1 + inv.kappa_odd, p["gamma_odd"]),
        ("upper", p["gamma_odd"], n - inv.tau_odd),
    ], gamma_odd=ctx.report.witnesses["gamma_odd"], odd_cycle_packing=inv.odd_cycle_packing)


def cy_ir_bound(ctx: Context) -> CheckResult:
    inv = ctx.inv
    return _bounds("cy_ir_bound", ctx, [("lower", inv.girth - 1 + inv.kappa, ctx.p["ir_cy"])],
                   ir_cy=ctx.report.witnesses["ir_cy"])


def cy_ir_char(ctx: Context) -> CheckResult:
    return _characterization("cy_ir_char", ctx, "ir_cy")


def ir_odd_bound(ctx: Context) -> CheckResult:
    """Bipartite graphs force ir_odd = n; otherwise girth-1+kappa_odd <= ir_odd.

    The swapped-case reading is evaluated alongside and reported in ``literal``.
    """
    inv, p, n = ctx.inv, ctx.p, ctx.n
    lo = inv.girth - 1 + inv.kappa_odd
    ir = p["ir_odd"]
    if ctx.bipartite:
        r = _equal("ir_odd_bound", ctx, "bipartite:ir_odd=n", ir, n, ir_odd=ctx.report.witnesses["ir_odd"])
        literal = {"reading": "bipartite => girth-1+kappa_odd <= ir_odd", "lhs": lo, "rhs": ir,
                   "holds": lo <= ir}
    else:
        r = _bounds("ir_odd_bound", ctx, [("lower", lo, ir)], ir_odd=ctx.report.witnesses["ir_odd"])
        literal = {"reading": "non-bipartite => ir_odd = n", "lhs": ir, "rhs": n, "holds": ir == n}
    r.literal = literal
    return r


def decycling_id(ctx: Context) -> CheckResult:
    return _equal("decycling_id", ctx, "n=beta_cy+nabla", ctx.n, ctx.p["beta_cy"] + ctx.inv.nabla,
                  beta_cy=ctx.report.witnesses["beta_cy"], nabla=ctx.inv.nabla_set)


def cover_id(ctx: Context) -> CheckResult:
    return _equal("cover_id", ctx, "beta_odd=n-tau_cover", ctx.p["beta_odd"], ctx.n - ctx.inv.tau_cover,
                  beta_odd=ctx.report.witnesses["beta_odd"], tau_cover=ctx.inv.tau_cover_set)


def t_bound(ctx: Context) -> CheckResult:
    return _bounds("t_bound", ctx, [("t<=beta_cy", ctx.inv.t, ctx.p["beta_cy"])],
                   t=ctx.inv.t_set, beta_cy=ctx.report.witnesses["beta_cy"])


REGISTRY: dict[str, Callable[[Context], CheckResult]] = {
    "easy_bounds_cycle": easy_bounds_cycle,
    "indep_char": indep_char,
    "odd_strict": odd_strict,
    "odd_indep_bound1": odd_indep_bound1,
    "odd_indep_bound2": odd_indep_bound2,
    "mop_beta": mop_beta,
    "kral_voss": kral_voss,
    "two_tuple": two_tuple,
    "cy_dom_bound": cy_dom_bound,
    "cy_dom_char": cy_dom_char,
    "cy_chain": cy_chain,
    "odd_chain": odd_chain,
    "lemma_cy2": lemma_cy2,
    "lemma_indep_dom": lemma_indep_dom,
    "lemma_dom_irr": lemma_dom_irr,
    "lemma_cy_dom_irr": lemma_cy_dom_irr,
    "gamma_odd_upper": gamma_odd_upper,
    "gamma_odd_lower": gamma_odd_lower,
    "cy_ir_bound": cy_ir_bound,
    "cy_ir_char": cy_ir_char,
    "ir_odd_bound": ir_odd_bound,
    "decycling_id": decycling_id,
    "cover_id": cover_id,
    "t_bound": t_bound,
}
CHECK_NAMES = tuple(REGISTRY)


def resolve_checks(names: Iterable[str] | str | None) -> list[str]:
    if names is None or names == "all":
        return list(CHECK_NAMES)
    if isinstance(names, str):
        names = [x for x in names.split(",") if x]
    names = list(names)
    if "all" in names:
        return list(CHECK_NAMES)
    unknown = [x for x in names if x not in REGISTRY]
    if unknown:
        raise InputError(f"unknown check name(s): {', '.join(unknown)}")
    return names


def make_context(g: Graph, flags: FamilyFlags | None = None, cap: int | None = None,
                 report: ParameterReport | None = None,
                 table: ClassificationTable | None = None) -> Context:
    table = table or ClassificationTable(g, cap)
    report = report or compute_all(g, cap, table=table)
    return Context(g, flags or FamilyFlags(), report, table)


def check(g: Graph, flags: FamilyFlags | None, name: str, cap: int | None = None) -> CheckResult:
    resolve_checks([name])
    return REGISTRY[name](make_context(g, flags, cap))


def verify_all(g: Graph, flags: FamilyFlags | None = None, checks: Iterable[str] | str | None = None,
               cap: int | None = None, context: Context | None = None) -> list[CheckResult]:
    names = resolve_checks(checks)
    ctx = context or make_context(g, flags, cap)
    return [REGISTRY[name](ctx) for name in names]


def reverify(result: CheckResult, flags: FamilyFlags | None = None, cap: int | None = None) -> bool:
    """Re-parse a failing result's counterexample graph and confirm it still fails."""
    if result.status != FAILS or not result.counterexample:
        return False
    g = parse_graph6(result.counterexample["graph6"])
    return check(g, flags, result.check_name, cap).status == FAILS


__all__ = [
    "CHECK_NAMES", "CheckResult", "Context", "FAILS", "HOLDS", "NOT_APPLICABLE", "REGISTRY",
    "check", "find_path_structure", "make_context", "path_structure", "resolve_checks", "reverify",
    "verify_all", "to_graph6",
]
