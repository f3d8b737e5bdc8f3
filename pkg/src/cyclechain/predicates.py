"""Membership predicates for the six set kinds, evaluated directly on a graph.

These are the reference definitions; :mod:`cyclechain.solver` evaluates the
same predicates in bulk from a per-subset table and is cross-checked against
this module in the tests.
"""
from __future__ import annotations

import enum

from .graph import Graph, bits, cycle_masks, is_acyclic, is_bipartite


class PredicateKind(enum.Enum):
    CycleIndependent = "cycle_independent"
    OddCycleIndependent = "odd_cycle_independent"
    CycleDominating = "cycle_dominating"
    OddCycleDominating = "odd_cycle_dominating"
    CycleIrredundant = "cycle_irredundant"
    OddCycleIrredundant = "odd_cycle_irredundant"

    @property
    def odd(self) -> bool:
        return self.value.startswith("odd")

    @property
    def role(self) -> str:
        return self.value.rsplit("_", 1)[1]

    @property
    def mode(self) -> str:
        """Extremality used for the lower parameter: ``maximal`` or ``minimal``."""
        return "minimal" if self.role == "dominating" else "maximal"


CYCLE, ODD = "cycle", "odd"


def _family(kind: str | PredicateKind) -> bool:
    if isinstance(kind, PredicateKind):
        return kind.odd
    if kind not in (CYCLE, ODD):
        raise ValueError(f"unknown cycle family {kind!r}")
    return kind == ODD


def dominates(g: Graph, kind: str | PredicateKind, s: int, u: int) -> bool:
    """True iff ``u`` lies on a cycle (odd cycle for ``kind='odd'``) of the subgraph induced by S + u."""
    oc, ooc = cycle_masks(g, s | 1 << u)
    return bool((ooc if _family(kind) else oc) >> u & 1)


def _dominating(g: Graph, odd: bool, s: int) -> bool:
    return all(dominates(g, ODD if odd else CYCLE, s, u) for u in bits(g.full & ~s))


def _irredundant(g: Graph, odd: bool, s: int) -> bool:
    fam = ODD if odd else CYCLE
    inner = cycle_masks(g, s)[1 if odd else 0]
    outside = list(bits(g.full & ~s))
    dominated = [u for u in outside if dominates(g, fam, s, u)]
    for v in bits(s):
        if not inner >> v & 1:
            continue
        rest = s & ~(1 << v)
        if not any(not dominates(g, fam, rest, u) for u in dominated):
            return False
    return True


def is_member(g: Graph, kind: PredicateKind, s: int) -> bool:
    if kind is PredicateKind.CycleIndependent:
        return is_acyclic(g, s)
    if kind is PredicateKind.OddCycleIndependent:
        return is_bipartite(g, s)
    if kind.role == "dominating":
        return _dominating(g, kind.odd, s)
    return _irredundant(g, kind.odd, s)


def is_maximal(g: Graph, kind: PredicateKind, s: int) -> bool:
    """Maximality of a member set.

    Independence is hereditary so single-vertex extensions suffice.
    Irredundance is neither hereditary nor ancestral: every proper superset is
    examined (exponential in ``n - |S|``).
    """
    if not is_member(g, kind, s):
        return False
    rest = g.full & ~s
    if kind.role == "independent":
        return not any(is_member(g, kind, s | 1 << v) for v in bits(rest))
    if kind.role == "irredundant":
        sub = rest
        while sub:
            if is_member(g, kind, s | sub):
                return False
            sub = (sub - 1) & rest
        return True
    raise ValueError(f"maximality is not used for {kind.name}")


def is_minimal(g: Graph, kind: PredicateKind, s: int) -> bool:
    """Minimality of a dominating set; domination is ancestral so single removals suffice."""
    if kind.role != "dominating":
        raise ValueError(f"minimality is not used for {kind.name}")
    if not is_member(g, kind, s):
        return False
    return not any(is_member(g, kind, s & ~(1 << v)) for v in bits(s))


def is_extremal(g: Graph, kind: PredicateKind, s: int) -> bool:
    return is_minimal(g, kind, s) if kind.mode == "minimal" else is_maximal(g, kind, s)
