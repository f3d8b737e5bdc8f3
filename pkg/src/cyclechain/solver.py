"""Exact chain parameters from one sweep over all 2^n vertex subsets."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import check_cap
from .graph import Graph, bits, cycle_masks, popcount, to_graph6
from .invariants import InvariantBundle, compute_invariants
from .predicates import PredicateKind, is_extremal, is_member

K = PredicateKind

# predicate bit layout inside ClassificationTable.flags
MEMBER = {
    K.CycleIndependent: 1 << 0,
    K.OddCycleIndependent: 1 << 1,
    K.CycleDominating: 1 << 2,
    K.OddCycleDominating: 1 << 3,
    K.CycleIrredundant: 1 << 4,
    K.OddCycleIrredundant: 1 << 5,
}
EXTREMAL = {k: b << 6 for k, b in MEMBER.items()}

# (json name, kind, which extremum)
PARAMETERS: tuple[tuple[str, PredicateKind, str], ...] = (
    ("ir_cy", K.CycleIrredundant, "lower"),
    ("gamma_cy", K.CycleDominating, "lower"),
    ("i_cy", K.CycleIndependent, "lower"),
    ("beta_cy", K.CycleIndependent, "upper"),
    ("Gamma_cy", K.CycleDominating, "upper"),
    ("IR_cy", K.CycleIrredundant, "upper"),
    ("ir_odd", K.OddCycleIrredundant, "lower"),
    ("gamma_odd", K.OddCycleDominating, "lower"),
    ("i_odd", K.OddCycleIndependent, "lower"),
    ("beta_odd", K.OddCycleIndependent, "upper"),
    ("Gamma_odd", K.OddCycleDominating, "upper"),
    ("IR_odd", K.OddCycleIrredundant, "upper"),
)
CY_CHAIN = tuple(p[0] for p in PARAMETERS[:6])
ODD_CHAIN = tuple(p[0] for p in PARAMETERS[6:])


class ClassificationTable:
    """Per-subset predicate and extremality bits for one graph.

    ``flags[S]`` packs six membership bits and six extremality bits
    (maximal for independent/irredundant kinds, minimal for dominating kinds).
    Built once, then read-only.
    """

    def __init__(self, g: Graph, cap: int | None = None):
        check_cap(g.n, cap, "classification table")
        self.graph = g
        n = g.n
        size = 1 << n
        full = g.full
        oc = [0] * size
        ooc = [0] * size
        for s in range(size):
            oc[s], ooc[s] = cycle_masks(g, s)
        self.on_cycle = oc
        self.on_odd_cycle = ooc

        # dom[S]: outside vertices u with u on a (odd) cycle of <S + u>
        dom_cy = [0] * size
        dom_odd = [0] * size
        for s in range(size):
            a = b = 0
            for u in bits(full & ~s):
                t = s | 1 << u
                if oc[t] >> u & 1:
                    a |= 1 << u
                    if ooc[t] >> u & 1:
                        b |= 1 << u
            dom_cy[s], dom_odd[s] = a, b
        self.dominated_cy = dom_cy
        self.dominated_odd = dom_odd

        flags = [0] * size
        for s in range(size):
            f = 0
            outside = full & ~s
            if not oc[s]:
                f |= MEMBER[K.CycleIndependent]
            if not ooc[s]:
                f |= MEMBER[K.OddCycleIndependent]
            if dom_cy[s] == outside:
                f |= MEMBER[K.CycleDominating]
            if dom_odd[s] == outside:
                f |= MEMBER[K.OddCycleDominating]
            if _irredundant(s, oc[s], dom_cy):
                f |= MEMBER[K.CycleIrredundant]
            if _irredundant(s, ooc[s], dom_odd):
                f |= MEMBER[K.OddCycleIrredundant]
            flags[s] = f

        # hereditary / ancestral kinds: one-step checks suffice
        for s in range(size):
            f = flags[s]
            outside = full & ~s
            for kind in (K.CycleIndependent, K.OddCycleIndependent):
                bit = MEMBER[kind]
                if f & bit and not any(flags[s | 1 << v] & bit for v in bits(outside)):
                    f |= EXTREMAL[kind]
            for kind in (K.CycleDominating, K.OddCycleDominating):
                bit = MEMBER[kind]
                if f & bit and not any(flags[s & ~(1 << v)] & bit for v in bits(s)):
                    f |= EXTREMAL[kind]
            flags[s] = f

        # irredundance: maximal iff no proper superset of any size is a member.
        # above[S] holds the member bits of the strict-superset closure; supersets
        # have larger masks so a descending sweep sees them first.
        irr_bits = MEMBER[K.CycleIrredundant] | MEMBER[K.OddCycleIrredundant]
        above = [0] * size
        for s in range(size - 1, -1, -1):
            acc = 0
            for v in bits(full & ~s):
                t = s | 1 << v
                acc |= (flags[t] & irr_bits) | above[t]
            above[s] = acc
            member = flags[s] & irr_bits
            flags[s] |= (member & ~acc) << 6
        self.flags = flags

    def __len__(self) -> int:
        return len(self.flags)

    def member(self, kind: PredicateKind, s: int) -> bool:
        return bool(self.flags[s] & MEMBER[kind])

    def extremal(self, kind: PredicateKind, s: int) -> bool:
        return bool(self.flags[s] & EXTREMAL[kind])

    def sets(self, kind: PredicateKind, mode: str) -> list[int]:
        """All members / all extremal members, ascending by mask."""
        if mode == "all-members":
            bit = MEMBER[kind]
        elif mode in ("all-maximal", "all-minimal"):
            want = "minimal" if mode == "all-minimal" else "maximal"
            if want != kind.mode:
                raise ValueError(f"{mode} is not defined for {kind.name}")
            bit = EXTREMAL[kind]
        else:
            raise ValueError(f"unknown mode {mode!r}")
        return [s for s, f in enumerate(self.flags) if f & bit]

    def parameter(self, kind: PredicateKind, extremum: str) -> tuple[int, int]:
        """``(value, witness)`` with the smallest-mask witness among optima."""
        if extremum == "upper":
            bit = EXTREMAL[kind] if kind.role == "dominating" else MEMBER[kind]
            better = int.__gt__
        elif extremum == "lower":
            bit = MEMBER[kind] if kind.role == "dominating" else EXTREMAL[kind]
            better = int.__lt__
        else:
            raise ValueError(f"unknown extremum {extremum!r}")
        best_val, best_set = None, 0
        for s, f in enumerate(self.flags):
            if f & bit:
                k = popcount(s)
                if best_val is None or better(k, best_val):
                    best_val, best_set = k, s
        assert best_val is not None, "every kind has at least one extremal member"
        return best_val, best_set


def _irredundant(s: int, inner: int, dom: list[int]) -> bool:
    here = dom[s]
    for u in bits(s & inner):
        if not here & ~dom[s & ~(1 << u)]:
            return False
    return True


def compute_parameter(g: Graph, kind: PredicateKind, extremum: str, cap: int | None = None,
                      table: ClassificationTable | None = None) -> tuple[int, int]:
    table = table or ClassificationTable(g, cap)
    return table.parameter(kind, extremum)


def enumerate_extremal_sets(g: Graph, kind: PredicateKind, mode: str, cap: int | None = None,
                            table: ClassificationTable | None = None) -> list[int]:
    table = table or ClassificationTable(g, cap)
    return table.sets(kind, mode)


@dataclass
class ParameterReport:
    graph6: str
    n: int
    values: dict[str, int]
    witnesses: dict[str, int]
    invariants: InvariantBundle
    chain_violations: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "parameters": dict(self.values),
            "witnesses": {k: list(bits(v)) for k, v in self.witnesses.items()},
            "invariants": self.invariants.as_dict(),
            "chain_violations": list(self.chain_violations),
        }


def chain_violations(values: dict[str, int]) -> list[str]:
    out = []
    for chain in (CY_CHAIN, ODD_CHAIN):
        for a, b in zip(chain, chain[1:]):
            if values[a] > values[b]:
                out.append(f"{a}={values[a]} > {b}={values[b]}")
    return out


# direct superset enumeration for irredundance maximality is 2^(n-|S|) member
# tests; above this size witnesses are re-checked for membership only
DIRECT_RECHECK_MAX_N = 12


def compute_all(g: Graph, cap: int | None = None, table: ClassificationTable | None = None,
                invariants: InvariantBundle | None = None) -> ParameterReport:
    """All twelve chain parameters plus the invariant bundle.

    Witnesses are re-verified with the direct predicates before emission.
    Chain violations are recorded, not raised.
    """
    table = table or ClassificationTable(g, cap)
    values: dict[str, int] = {}
    witnesses: dict[str, int] = {}
    for name, kind, ext in PARAMETERS:
        v, w = table.parameter(kind, ext)
        needs_extremal = (ext == "lower") != (kind.role == "dominating")
        if not is_member(g, kind, w):
            raise AssertionError(f"{name} witness fails membership")
        if needs_extremal and (kind.role != "irredundant" or g.n <= DIRECT_RECHECK_MAX_N):
            if not is_extremal(g, kind, w):
                raise AssertionError(f"{name} witness fails extremality")
        values[name], witnesses[name] = v, w
    inv = invariants or compute_invariants(g, cap)
    return ParameterReport(
        graph6=to_graph6(g),
        n=g.n,
        values=values,
        witnesses=witnesses,
        invariants=inv,
        chain_violations=chain_violations(values),
    )


def compute_many(graphs: Iterable[Graph], cap: int | None = None) -> list[ParameterReport]:
    return [compute_all(g, cap) for g in graphs]
