import random

import networkx as nx
import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs, graphs_with_subset, one_based, random_graph
from cyclechain.errors import InputError
from cyclechain.families import double_star, fan, sun
from cyclechain.graph import (
    Graph, blocks, cycle_masks, is_acyclic, is_bipartite, mask_of, on_cycle, on_odd_cycle,
    parse_edge_list, parse_graph6, to_edge_list, to_graph6,
)

SUN_TEXT = "6 9\n2 3\n3 4\n4 5\n0 5\n0 1\n1 2\n1 3\n1 5\n3 5"
C3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


class TestEdgeList:
    def test_triangle(self):
        g = parse_edge_list("3 3\n0 1\n1 2\n0 2")
        assert g == C3
        assert g.m == 3

    def test_isolated(self):
        g = parse_edge_list("2 0")
        assert g.n == 2 and g.m == 0

    def test_sun_edge_list(self):
        assert parse_edge_list(SUN_TEXT) == sun()

    def test_duplicates_collapse(self):
        assert parse_edge_list("3 4\n0 1\n1 0\n1 2\n0 2") == C3

    @pytest.mark.parametrize("text, line", [
        ("3 1\n0 3", 2),
        ("3 1\n1 1", 2),
        ("3 2\n0 1\nfoo", 3),
        ("x\n", 1),
        ("3 2\n0 1", 1),
    ])
    def test_errors_carry_line(self, text, line):
        with pytest.raises(InputError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line
        assert f"line {line}" in str(exc.value)

    def test_round_trip(self):
        g = sun()
        assert parse_edge_list(to_edge_list(g)) == g


class TestGraph6:
    def test_triangle(self):
        assert parse_graph6("Bw") == C3
        assert to_graph6(C3) == "Bw"

    def test_reference_encoder_agrees(self):
        assert nx.to_graph6_bytes(nx.cycle_graph(3), header=False).strip() == b"Bw"

    def test_small_tables(self):
        assert to_graph6(Graph(1, (0,))) == "@"
        assert to_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"
        assert to_graph6(Graph(0, ())) == "?"

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<Bw\n") == C3

    def test_double_star_degrees(self):
        s = nx.to_graph6_bytes(nx.Graph(double_star(3).edges()), header=False).decode().strip()
        assert sorted(parse_graph6(s).degrees(), reverse=True) == [4, 4, 2, 2, 2]

    @pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x01", "~??", "~?A?"])
    def test_errors(self, bad):
        with pytest.raises(InputError):
            parse_graph6(bad)

    def test_networkx_interop(self):
        rng = random.Random(3)
        for n in list(range(13)) + [40, 62, 63, 64]:
            g = random_graph(rng, n, 0.4)
            ref = nx.Graph()
            ref.add_nodes_from(range(n))
            ref.add_edges_from(g.edges())
            assert to_graph6(g) == nx.to_graph6_bytes(ref, header=False).decode().strip()

    @given(graphs(0, 12))
    def test_round_trip(self, g):
        assert parse_graph6(to_graph6(g)) == g


class TestValidation:
    def test_asymmetric(self):
        with pytest.raises(InputError):
            Graph(2, (2, 0))

    def test_self_loop(self):
        with pytest.raises(InputError):
            Graph(1, (1,))

    def test_out_of_range(self):
        with pytest.raises(InputError):
            Graph(2, (4, 0))

    def test_too_many_vertices(self):
        with pytest.raises(InputError):
            Graph(65, tuple([0] * 65))


class TestPrimitives:
    def test_acyclic_examples(self):
        assert is_acyclic(C3, 0b011)
        assert not is_acyclic(C3, 0b111)
        # u1, v1, v2, v3 of the three-leaf double star
        assert is_acyclic(double_star(3), mask_of([0, 2, 3, 4]))

    def test_bipartite_examples(self):
        g = double_star(3)
        assert not is_bipartite(g, mask_of([0, 1, 2, 3, 4]))
        assert is_bipartite(g, mask_of([0, 2, 3, 4]))
        for s in range(8):
            if bin(s).count("1") <= 2:
                assert is_bipartite(C3, s)

    def test_on_cycle_examples(self):
        assert on_cycle(C3, 0b111, 0)
        p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert not any(on_cycle(p4, p4.full, v) for v in range(4))
        # triangle 1-2-6 inside {1, 2, 4, 6}
        assert on_cycle(sun(), one_based(1, 2, 4, 6), 0)

    def test_on_odd_cycle_examples(self):
        c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        c4 = Graph.from_edges(4, [(i, (i + 1) % 4) for i in range(4)])
        assert all(on_odd_cycle(c5, c5.full, v) for v in range(5))
        assert not any(on_odd_cycle(c4, c4.full, v) for v in range(4))
        assert on_odd_cycle(sun(), one_based(2, 3, 4), 2)

    def test_blocks_of_bowtie_with_tail(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)])
        assert sorted(blocks(g, g.full)) == sorted([0b000111, 0b011100, 0b110000])

    def test_fan_all_on_odd_cycles(self):
        g = fan(6)
        oc, ooc = cycle_masks(g, g.full)
        assert oc == ooc == g.full

    @given(graphs_with_subset(1, 7))
    def test_forest_is_bipartite(self, gs):
        g, s = gs
        if is_acyclic(g, s):
            assert is_bipartite(g, s)

    @settings(max_examples=300)
    @given(graphs_with_subset(1, 8))
    def test_block_primitives_match_cycle_enumeration(self, gs):
        g, s = gs
        cyc = oracles.cycle_table(g)
        oc, ooc = cycle_masks(g, s)
        for v in range(g.n):
            if s >> v & 1:
                assert bool(oc >> v & 1) == oracles.on_cycle_brute(cyc, s, v)
                assert bool(ooc >> v & 1) == oracles.on_cycle_brute(cyc, s, v, odd=True)
        assert is_bipartite(g, s) == oracles.bipartite_brute(cyc, s)
        assert is_acyclic(g, s) == oracles.acyclic_brute(cyc, s)

    def test_brute_cycle_oracle_against_networkx(self):
        rng = random.Random(9)
        for _ in range(40):
            g = random_graph(rng, rng.randint(3, 7), 0.5)
            ref = nx.Graph(g.edges())
            ours = sorted(sorted(c) for c in oracles.simple_cycles(g))
            theirs = sorted(sorted(c) for c in nx.simple_cycles(ref)) if g.m else []
            assert ours == theirs
