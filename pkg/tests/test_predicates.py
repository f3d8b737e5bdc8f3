import random

import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs, graphs_with_subset, one_based, random_graph
from cyclechain.families import cycle, double_star, path, sun
from cyclechain.graph import bits, popcount
from cyclechain.predicates import (
    CYCLE, ODD, PredicateKind as K, dominates, is_extremal, is_maximal, is_member, is_minimal,
)

ALL_KINDS = list(K)


def test_kind_metadata():
    assert K.OddCycleIrredundant.odd and not K.CycleDominating.odd
    assert K.CycleDominating.role == "dominating" and K.CycleDominating.mode == "minimal"
    assert K.OddCycleIndependent.mode == "maximal"
    assert K.CycleIrredundant.mode == "maximal"


def test_dominates_examples():
    g = sun()
    # vertex 5 closes the triangle 4-5-6
    assert dominates(g, ODD, one_based(4, 6), 4)
    assert not dominates(g, ODD, one_based(1, 3), 4)
    assert dominates(g, CYCLE, one_based(2, 4, 6), 0)
    with pytest.raises(ValueError):
        dominates(g, "even", 0, 0)


def test_sun_minimal_odd_dominating():
    g = sun()
    s = one_based(2, 4, 6)
    assert is_member(g, K.OddCycleDominating, s)
    assert is_minimal(g, K.OddCycleDominating, s)
    assert is_member(g, K.OddCycleIndependent, one_based(1, 3, 5)) is True


def test_double_star_sets():
    g = double_star(3)
    u1u2 = 0b11
    assert is_minimal(g, K.CycleDominating, u1u2)
    assert is_maximal(g, K.CycleIndependent, 0b11100 | 1)
    assert is_maximal(g, K.OddCycleIndependent, 0b11100 | 1)
    assert popcount(0b11100 | 1) == 4


def test_extremality_requires_membership():
    g = cycle(3)
    assert not is_maximal(g, K.CycleIndependent, 0b111)
    assert not is_minimal(g, K.CycleDominating, 0b001)
    with pytest.raises(ValueError):
        is_minimal(g, K.CycleIndependent, 0)
    with pytest.raises(ValueError):
        is_maximal(g, K.OddCycleDominating, g.full)


def test_whole_vertex_set_dominates():
    g = path(4)
    assert is_member(g, K.CycleDominating, g.full)
    assert not is_member(g, K.CycleDominating, 0b0111)
    # no outside vertices, nothing to dominate: every set is vacuously fine at S=V
    assert is_member(g, K.OddCycleDominating, g.full)


@settings(max_examples=250, deadline=None)
@given(graphs_with_subset(1, 7))
def test_membership_matches_raw_definitions(gs):
    g, s = gs
    cyc = oracles.cycle_table(g)
    assert is_member(g, K.CycleIndependent, s) == oracles.acyclic_brute(cyc, s)
    assert is_member(g, K.OddCycleIndependent, s) == oracles.bipartite_brute(cyc, s)
    for odd, dk, ik in ((False, K.CycleDominating, K.CycleIrredundant),
                        (True, K.OddCycleDominating, K.OddCycleIrredundant)):
        outside = [u for u in range(g.n) if not s >> u & 1]
        assert is_member(g, dk, s) == all(oracles.dominated_brute(cyc, s, u, odd) for u in outside)
        assert is_member(g, ik, s) == oracles.irredundant_brute(g, cyc, s, odd)


@settings(max_examples=60, deadline=None)
@given(graphs(1, 6))
def test_independence_hereditary_domination_ancestral(g):
    for s in range(1 << g.n):
        for v in range(g.n):
            if s >> v & 1:
                smaller = s & ~(1 << v)
                for k in (K.CycleIndependent, K.OddCycleIndependent):
                    if is_member(g, k, s):
                        assert is_member(g, k, smaller)
            else:
                bigger = s | 1 << v
                for k in (K.CycleDominating, K.OddCycleDominating):
                    if is_member(g, k, s):
                        assert is_member(g, k, bigger)


def test_irredundance_not_hereditary():
    """Some irredundant set has a non-irredundant subset, so 1-step maximality is not enough."""
    rng = random.Random(1)
    found = False
    for _ in range(400):
        g = random_graph(rng, rng.randint(4, 6), 0.6)
        for s in range(1 << g.n):
            if not is_member(g, K.CycleIrredundant, s):
                continue
            if any(not is_member(g, K.CycleIrredundant, s & ~(1 << v)) for v in bits(s)):
                found = True
                break
        if found:
            break
    assert found


@settings(max_examples=40, deadline=None)
@given(graphs(1, 6))
def test_extremal_via_superset_scan(g):
    """Maximality checked against every superset agrees with is_extremal for all kinds."""
    full = g.full
    for kind in ALL_KINDS:
        members = {s for s in range(1 << g.n) if is_member(g, kind, s)}
        for s in members:
            if kind.mode == "maximal":
                expect = not any(t != s and t & s == s for t in members)
            else:
                expect = not any(t != s and t & ~s == 0 for t in members)
            assert is_extremal(g, kind, s) == expect, (kind, s, full)
