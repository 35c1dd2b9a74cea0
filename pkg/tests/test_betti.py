"""Tests for the two-tier Betti table oracle."""
from __future__ import annotations

import pytest

from beireg.betti import (
    BettiTable,
    HilbertResult,
    StanleyReisnerComplex,
    betti_hochster,
    betti_koszul,
    hilbert_numerator,
    initial_complex,
    regularity,
    stanley_reisner_complex,
)
from beireg.graphs import (
    complete_graph,
    glue,
    graph,
    path_graph,
    star_graph,
)
from beireg.groebner import AlgebraError, PolyRing
from beireg.trees import tree_catalog

P = 32003


class TestBettiTable:
    def good(self) -> BettiTable:
        return BettiTable(p=P, entries={(0, 0): 1, (1, 2): 2, (2, 4): 1}, tier="tor")

    def test_reg_and_pd(self):
        t = self.good()
        assert t.reg == 2
        assert t.pd == 2

    def test_requires_unit_in_degree_zero(self):
        with pytest.raises(AlgebraError):
            BettiTable(p=P, entries={(1, 2): 1}, tier="tor")
        with pytest.raises(AlgebraError):
            BettiTable(p=P, entries={(0, 0): 2}, tier="tor")

    def test_rejects_stray_degree_zero_entry(self):
        with pytest.raises(AlgebraError):
            BettiTable(p=P, entries={(0, 0): 1, (0, 1): 1}, tier="tor")

    def test_rejects_diagonal_or_lower_entries(self):
        with pytest.raises(AlgebraError):
            BettiTable(p=P, entries={(0, 0): 1, (2, 2): 1}, tier="tor")

    def test_rejects_nonpositive_values(self):
        with pytest.raises(AlgebraError):
            BettiTable(p=P, entries={(0, 0): 1, (1, 2): 0}, tier="tor")

    def test_rejects_bad_tier_and_characteristic(self):
        with pytest.raises(AlgebraError):
            BettiTable(p=P, entries={(0, 0): 1}, tier="magic")
        with pytest.raises(AlgebraError):
            BettiTable(p=10, entries={(0, 0): 1}, tier="tor")

    def test_json_round_trip(self):
        t = self.good()
        text = t.to_json()
        assert text == ('{"p": 32003, "entries": [[0, 0, 1], [1, 2, 2], '
                        '[2, 4, 1]], "reg": 2, "pd": 2, "tier": "tor"}')
        back = BettiTable.from_json(text)
        assert back == t

    def test_from_json_checks_consistency(self):
        broken = ('{"p": 32003, "entries": [[0, 0, 1], [1, 2, 2]], '
                  '"reg": 5, "pd": 1, "tier": "tor"}')
        with pytest.raises(AlgebraError):
            BettiTable.from_json(broken)


class TestStanleyReisnerComplex:
    def test_from_monomials(self):
        ring = PolyRing(2, P)
        cx = stanley_reisner_complex([ring.xy_monomial(1, 2)], 4)
        # x1 is variable 0, y2 is variable 3
        assert cx.minimal_nonfaces == (0b1001,)
        assert cx.support == 0b1001
        assert cx.is_face(0b0110)
        assert cx.is_face(0b0001)
        assert not cx.is_face(0b1001)
        assert not cx.is_face(0b1011)

    def test_rejects_non_squarefree(self):
        ring = PolyRing(1, P)
        with pytest.raises(AlgebraError):
            stanley_reisner_complex([ring.monomial({0: 2})], 2)

    def test_rejects_non_minimal_nonfaces(self):
        with pytest.raises(AlgebraError):
            StanleyReisnerComplex(num_vertices=4, minimal_nonfaces=(0b0011, 0b0111))
        with pytest.raises(AlgebraError):
            StanleyReisnerComplex(num_vertices=4, minimal_nonfaces=(0b0011, 0b0011))
        with pytest.raises(AlgebraError):
            StanleyReisnerComplex(num_vertices=2, minimal_nonfaces=(0b0100,))
        with pytest.raises(AlgebraError):
            StanleyReisnerComplex(num_vertices=4, minimal_nonfaces=(0b0110, 0b0011))

    def test_path_initial_complex_facets(self):
        # in(J) for the 3-vertex path: x1y2 and x2y3; the complex on the
        # six variables has four facets, all of size four
        cx = initial_complex(path_graph(3), P)
        assert cx.minimal_nonfaces == (0b010001, 0b100010)
        assert sorted(cx.facets()) == [0b001111, 0b011110, 0b101101, 0b111100]

    def test_empty_graph_complex_is_a_simplex(self):
        cx = initial_complex(graph(2, []), P)
        assert cx.minimal_nonfaces == ()
        assert cx.facets() == [0b1111]


class TestKoszulTier:
    def test_single_edge(self):
        t = betti_koszul(path_graph(2), P)
        assert t.entries == {(0, 0): 1, (1, 2): 1}
        assert t.reg == 1 and t.pd == 1 and t.tier == "tor"

    def test_path_three(self):
        t = betti_koszul(path_graph(3), P)
        assert t.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
        assert t.reg == 2

    def test_triangle(self):
        # 2x3 generic-matrix minors: the Eagon-Northcott shape
        t = betti_koszul(complete_graph(3), P)
        assert t.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
        assert t.reg == 1 and t.pd == 2

    def test_path_four_is_complete_intersection(self):
        # the three edge binomials of a path form a regular sequence
        t = betti_koszul(path_graph(4), P)
        assert t.entries == {(0, 0): 1, (1, 2): 3, (2, 4): 3, (3, 6): 1}

    def test_star_three(self):
        t = betti_koszul(star_graph(3), P)
        assert t.entries == {(0, 0): 1, (1, 2): 3, (2, 4): 4, (3, 5): 2}
        assert t.reg == 2

    def test_two_disjoint_edges_tensor(self):
        t = betti_koszul(graph(4, [(1, 2), (3, 4)]), P)
        assert t.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}

    def test_no_edges(self):
        t = betti_koszul(graph(3, []), P)
        assert t.entries == {(0, 0): 1}
        assert t.reg == 0 and t.pd == 0

    def test_characteristic_stability_small(self):
        for g in [path_graph(3), path_graph(4), star_graph(3), complete_graph(4)]:
            assert betti_koszul(g, 2).entries == betti_koszul(g, P).entries

    def test_cap(self):
        with pytest.raises(AlgebraError, match="cap"):
            betti_koszul(path_graph(8), P)


class TestHochsterTier:
    def test_single_generator(self):
        ring = PolyRing(2, P)
        cx = stanley_reisner_complex([ring.xy_monomial(1, 2)], 4)
        t = betti_hochster(cx, P)
        assert t.entries == {(0, 0): 1, (1, 2): 1}
        assert t.reg == 1 and t.tier == "hochster"

    def test_two_generator_chain(self):
        ring = PolyRing(3, P)
        gens = [ring.xy_monomial(1, 2), ring.xy_monomial(2, 3)]
        cx = stanley_reisner_complex(gens, 6)
        t = betti_hochster(cx, P)
        assert t.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}

    def test_reg_only_returns_witness(self):
        ring = PolyRing(3, P)
        gens = [ring.xy_monomial(1, 2), ring.xy_monomial(2, 3)]
        cx = stanley_reisner_complex(gens, 6)
        t = betti_hochster(cx, P, reg_only=True)
        assert t.reg == 2
        assert t.entries == {(0, 0): 1, (2, 4): 1}

    def test_no_nonfaces(self):
        cx = StanleyReisnerComplex(num_vertices=6, minimal_nonfaces=())
        t = betti_hochster(cx, P)
        assert t.entries == {(0, 0): 1}
        assert t.reg == 0

    def test_triangle_matches_tor_tier(self):
        t = betti_hochster(initial_complex(complete_graph(3), P), P)
        assert t.entries == betti_koszul(complete_graph(3), P).entries

    def test_cap(self):
        cx = StanleyReisnerComplex(num_vertices=26, minimal_nonfaces=())
        with pytest.raises(AlgebraError, match="cap"):
            betti_hochster(cx, P)


class TestTierAgreement:
    @pytest.mark.parametrize("p", [2, P])
    def test_trees_up_to_five_vertices(self, p):
        for entry in tree_catalog(5):
            g = entry.graph
            exact = betti_koszul(g, p).reg
            degen = betti_hochster(initial_complex(g, p), p, reg_only=True).reg
            assert exact == degen, entry.canonical_code

    def test_small_block_graphs(self):
        for g in [complete_graph(4),
                  glue(complete_graph(3), 3, complete_graph(3), 1),
                  graph(5, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])]:
            exact = betti_koszul(g, P).reg
            degen = betti_hochster(initial_complex(g, P), P, reg_only=True).reg
            assert exact == degen


class TestRegularity:
    def test_paths(self):
        assert regularity(path_graph(5)).value == 4
        assert regularity(path_graph(5)).tier == "tor"

    def test_auto_switches_to_simplicial_tier(self):
        r = regularity(path_graph(7))
        assert r.value == 6
        assert r.tier == "hochster"

    def test_forced_tor_at_its_cap(self):
        r = regularity(path_graph(7), tier="tor")
        assert r.value == 6 and r.tier == "tor"

    def test_pure_lobster_seven_vertices_both_tiers(self):
        g = graph(7, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)])
        assert regularity(g, tier="tor").value == 5
        assert regularity(g, tier="hochster").value == 5

    def test_clique_with_path_tail(self):
        g = graph(6, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
                      (4, 5), (5, 6)])
        assert regularity(g, tier="tor").value == 3
        assert regularity(g, tier="hochster").value == 3

    def test_disjoint_union_sums(self):
        g = graph(6, [(1, 2), (2, 3), (4, 5), (5, 6)])
        assert regularity(g).value == 4

    def test_mixed_tiers_across_components(self):
        edges = [(1, 2), (2, 3)] + [(i, i + 1) for i in range(4, 10)]
        g = graph(10, edges)
        r = regularity(g)
        assert r.value == 2 + 6
        assert r.tier == "mixed"

    def test_star_regularity(self):
        assert regularity(star_graph(3)).value == 2
        assert regularity(star_graph(4)).value == 2

    def test_isolated_vertices_contribute_nothing(self):
        assert regularity(graph(3, [])).value == 0
        assert regularity(graph(1, [])).value == 0

    def test_glued_triangles_add(self):
        g = glue(complete_graph(3), 3, complete_graph(3), 1)
        assert regularity(g).value == 2
        assert regularity(g, tier="hochster").value == 2

    def test_refusals(self):
        with pytest.raises(AlgebraError):
            regularity(path_graph(8), tier="tor")
        with pytest.raises(AlgebraError):
            regularity(path_graph(13), tier="hochster")
        with pytest.raises(AlgebraError):
            regularity(path_graph(13))
        with pytest.raises(AlgebraError):
            regularity(path_graph(3), tier="sorcery")


def pendant_prediction(parent: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    """Betti table of the pendant extension at a free vertex: the parent
    table plus the parent table shifted by (1, 2)."""
    out: dict[tuple[int, int], int] = {}
    for (i, j), b in parent.items():
        out[(i, j)] = out.get((i, j), 0) + b
        out[(i + 1, j + 2)] = out.get((i + 1, j + 2), 0) + b
    return out


class TestPendantRecursion:
    @pytest.mark.parametrize("parent,leaf", [
        (path_graph(4), 4),
        (star_graph(3), 2),
        (graph(5, [(1, 2), (2, 3), (2, 4), (4, 5)]), 5),
    ])
    def test_entrywise(self, parent, leaf):
        from beireg.graphs import add_pendant

        child = add_pendant(parent, leaf)
        got = betti_koszul(child, P).entries
        want = pendant_prediction(betti_koszul(parent, P).entries)
        assert got == want


class TestHilbert:
    def test_single_edge(self):
        r = hilbert_numerator(path_graph(2), P)
        assert r == HilbertResult(numerator=(1, 0, -1), match=True)

    def test_path_three(self):
        r = hilbert_numerator(path_graph(3), P)
        assert r.numerator == (1, 0, -2, 0, 1)

    def test_triangle(self):
        r = hilbert_numerator(complete_graph(3), P)
        assert r.numerator == (1, 0, -3, 2)

    def test_empty_graph(self):
        r = hilbert_numerator(graph(2, []), P)
        assert r.numerator == (1,)

    def test_star(self):
        r = hilbert_numerator(star_graph(3), P)
        assert r.numerator == (1, 0, -3, 0, 4, -2)

    def test_cap(self):
        with pytest.raises(AlgebraError, match="cap"):
            hilbert_numerator(path_graph(8), P)
