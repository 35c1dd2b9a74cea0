"""Tests for exact F_p polynomial arithmetic, edge binomials, division, and
Buchberger's algorithm.

Hand-computed fixtures: the one-edge and two-edge graphs, the triangle (whose
three minors already form the reduced basis), and the two-edge path with the
middle vertex labeled last (the smallest case that forces a cubic basis
element).  Structural properties (S-polynomial closure, input-order
independence, squarefree leading terms, characteristic independence of the
initial ideal) are checked across the small-tree catalog and a family of
block graphs.
"""
import random

import pytest

from beireg.graphs import complete_graph, glue, graph, path_graph, star_graph
from beireg.groebner import (
    AlgebraError,
    GroebnerBasis,
    Monomial,
    PolyRing,
    buchberger,
    edge_ideal_generators,
    graph_groebner_basis,
    initial_ideal,
    normal_form,
    s_polynomial,
)
from beireg.trees import tree_catalog


def ring_for(n: int, p: int = 32003) -> PolyRing:
    return PolyRing(n, p)


# ---------------------------------------------------------------------------
# ring and monomial basics


def test_ring_validation():
    r = PolyRing(3, 32003)
    assert r.num_vars == 6
    with pytest.raises(AlgebraError):
        PolyRing(3, 32004)  # not prime
    with pytest.raises(AlgebraError):
        PolyRing(-1, 2)
    PolyRing(0, 2)  # empty graph ring is fine


def test_variable_naming_and_indexing():
    r = ring_for(3)
    assert [r.var_name(k) for k in range(6)] == ["x1", "x2", "x3", "y1", "y2", "y3"]
    assert r.x_index(1) == 0 and r.y_index(1) == 3
    with pytest.raises(AlgebraError):
        r.x_index(4)


def test_lex_order_is_tuple_order():
    r = ring_for(3)
    x1y2 = r.xy_monomial(1, 2)
    x2y1 = r.xy_monomial(2, 1)
    x1y3 = r.xy_monomial(1, 3)
    # x1 beats anything without x1; y2 beats y3
    assert x1y2 > x2y1
    assert x1y2 > x1y3
    assert max([x2y1, x1y3, x1y2]) == x1y2


def test_monomial_arithmetic():
    r = ring_for(2)
    a = r.monomial({0: 2, 3: 1})  # x1^2 y2
    b = r.monomial({0: 1, 1: 1})  # x1 x2
    assert a.degree == 3 and not a.squarefree
    assert b.squarefree
    assert a.mul(b).exponents == (3, 1, 0, 1)
    assert b.divides(a.mul(b))
    assert a.mul(b).quotient(b) == a
    assert a.lcm(b).exponents == (2, 1, 0, 1)
    assert not a.coprime(b)
    assert r.monomial({1: 1}).coprime(r.monomial({2: 1}))
    with pytest.raises(AlgebraError):
        b.quotient(a)
    assert r.one_monomial().is_one()


def test_polynomial_normalization_and_display():
    r = ring_for(2)
    f = r.edge_binomial(1, 2)
    assert str(f) == "x1*y2 - x2*y1"
    assert f.leading_monomial() == r.xy_monomial(1, 2)
    assert f.leading_coefficient() == 1
    assert f.degree() == 2 and f.is_homogeneous()
    assert (f - f).is_zero()
    assert str(f - f) == "0"
    # coefficients are reduced mod p and zero terms dropped
    g = r.from_terms({r.xy_monomial(1, 2): 32003})
    assert g.is_zero()
    h = r.from_terms({r.one_monomial(): -1, r.monomial({0: 2}): 2})
    assert str(h) == "2*x1^2 - 1"


def test_edge_ideal_generators_examples():
    r2 = ring_for(2)
    assert edge_ideal_generators(path_graph(2), r2) == [r2.edge_binomial(1, 2)]
    r3 = ring_for(3)
    assert edge_ideal_generators(path_graph(3), r3) == [
        r3.edge_binomial(1, 2), r3.edge_binomial(2, 3)]
    assert edge_ideal_generators(graph(3, []), r3) == []
    with pytest.raises(AlgebraError):
        edge_ideal_generators(path_graph(3), r2)
    with pytest.raises(AlgebraError):
        r2.edge_binomial(2, 1)


# ---------------------------------------------------------------------------
# division


def test_normal_form_single_relation():
    r = ring_for(2)
    f = r.from_terms({r.xy_monomial(1, 2): 1})
    nf = normal_form(f, [r.edge_binomial(1, 2)])
    assert nf == r.from_terms({r.xy_monomial(2, 1): 1})


def test_normal_form_of_ideal_member_is_zero():
    g = path_graph(3)
    gb = graph_groebner_basis(g, 32003)
    r = gb.ring
    # x1y2x3y3... any combination of the generators reduces to zero
    f1, f2 = edge_ideal_generators(g, r)
    member = f1.term_mul(r.monomial({2: 1, 4: 2})) - f2.term_mul(r.xy_monomial(1, 1))
    assert gb.contains(member)
    assert not gb.contains(r.from_terms({r.xy_monomial(1, 3): 1}))


def test_normal_form_of_path_s_polynomial_is_zero():
    r = ring_for(3)
    gens = edge_ideal_generators(path_graph(3), r)
    assert normal_form(s_polynomial(gens[0], gens[1]), gens).is_zero()


def test_normal_form_idempotent():
    rng = random.Random(7)
    g = star_graph(3)
    gb = graph_groebner_basis(g, 32003)
    r = gb.ring
    basis = list(gb.basis)
    for _ in range(20):
        f = r.from_terms({
            r.monomial({rng.randrange(6): rng.randrange(3) for _ in range(3)}):
                rng.randrange(1, 32003)
            for _ in range(4)})
        once = normal_form(f, basis)
        assert normal_form(once, basis) == once


def test_normal_form_requires_monic_basis():
    r = ring_for(2)
    f = r.edge_binomial(1, 2)
    doubled = f + f
    with pytest.raises(AlgebraError):
        normal_form(f, [doubled])


# ---------------------------------------------------------------------------
# Buchberger on frozen instances


def test_buchberger_single_edge():
    gb = graph_groebner_basis(path_graph(2), 32003)
    assert gb.basis == (gb.ring.edge_binomial(1, 2),)
    assert gb.is_groebner_certificate()


def test_buchberger_path3_stays_quadratic():
    gb = graph_groebner_basis(path_graph(3), 32003)
    r = gb.ring
    assert set(gb.basis) == {r.edge_binomial(1, 2), r.edge_binomial(2, 3)}
    assert gb.is_groebner_certificate()
    assert [m.exponents for m in initial_ideal(gb)] == [
        r.xy_monomial(2, 3).exponents, r.xy_monomial(1, 2).exponents]


def test_buchberger_triangle_is_quadratic():
    gb = graph_groebner_basis(complete_graph(3), 32003)
    r = gb.ring
    assert set(gb.basis) == {
        r.edge_binomial(1, 2), r.edge_binomial(1, 3), r.edge_binomial(2, 3)}
    # the three 2x2 minors of [[x1,x2,x3],[y1,y2,y3]] are ideal members
    for i, j in ((1, 2), (1, 3), (2, 3)):
        assert gb.contains(r.edge_binomial(i, j))
    assert {m.exponents for m in initial_ideal(gb)} == {
        r.xy_monomial(1, 2).exponents, r.xy_monomial(1, 3).exponents,
        r.xy_monomial(2, 3).exponents}


def test_buchberger_path_with_high_middle_label_needs_a_cubic():
    # path 1-3-2: the division-closure forces x1x3y2 - x2x3y1
    g = graph(3, [(1, 3), (2, 3)])
    gb = graph_groebner_basis(g, 32003)
    r = gb.ring
    cubic = r.from_terms({
        r.monomial({0: 1, 2: 1, 4: 1}): 1,   # x1 x3 y2
        r.monomial({1: 1, 2: 1, 3: 1}): -1,  # x2 x3 y1
    })
    assert set(gb.basis) == {r.edge_binomial(1, 3), r.edge_binomial(2, 3), cubic}
    assert gb.is_groebner_certificate()
    lms = initial_ideal(gb)
    assert all(m.squarefree for m in lms)
    assert r.monomial({0: 1, 2: 1, 4: 1}) in lms


def test_buchberger_rejects_mixed_rings():
    with pytest.raises(AlgebraError):
        buchberger([ring_for(2).edge_binomial(1, 2), ring_for(3).edge_binomial(1, 2)])
    with pytest.raises(AlgebraError):
        buchberger([])


def test_empty_generators_give_empty_basis():
    gb = buchberger([], ring=ring_for(3))
    assert gb.basis == ()
    assert initial_ideal(gb) == []


# ---------------------------------------------------------------------------
# structural properties across the small catalog


def test_s_polynomial_closure_small_trees_and_blocks():
    cases = [e.graph for e in tree_catalog(6)]
    cases += [complete_graph(4), glue(complete_graph(3), 1, complete_graph(3), 1),
              graph(4, [(1, 2), (1, 3), (1, 4), (2, 3)])]
    for g in cases:
        gb = graph_groebner_basis(g, 32003)
        assert gb.is_groebner_certificate(), g.edges


def test_basis_independent_of_generator_order():
    rng = random.Random(11)
    for g in [path_graph(4), star_graph(3), complete_graph(4),
              graph(5, [(1, 4), (2, 4), (3, 4), (4, 5), (1, 2)])]:
        ref = graph_groebner_basis(g, 32003)
        r = ref.ring
        gens = edge_ideal_generators(g, r)
        for _ in range(3):
            rng.shuffle(gens)
            gb = buchberger(list(gens), r)
            assert gb.basis == ref.basis
            assert initial_ideal(gb) == initial_ideal(ref)


def test_leading_monomials_squarefree_trees_and_block_graphs():
    rng = random.Random(3)
    block_graphs = [complete_graph(4),
                    glue(complete_graph(3), 1, complete_graph(4), 2),
                    glue(glue(complete_graph(3), 2, complete_graph(3), 1), 3,
                         path_graph(3), 1)]
    # random labelings of a tree exercise orderings far from the natural one
    for n in (6, 7, 8):
        base = [e.graph for e in tree_catalog(n) if e.n == n][-1]
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        block_graphs.append(
            graph(n, [(perm[a - 1], perm[b - 1]) for a, b in base.edges]))
    for p in (2, 3, 32003):
        for entry in tree_catalog(6):
            lms = initial_ideal(graph_groebner_basis(entry.graph, p))
            assert all(m.squarefree for m in lms)
        for g in block_graphs:
            lms = initial_ideal(graph_groebner_basis(g, p))
            assert all(m.squarefree for m in lms)


def test_initial_ideal_characteristic_independent():
    for entry in tree_catalog(6):
        a = initial_ideal(graph_groebner_basis(entry.graph, 2))
        b = initial_ideal(graph_groebner_basis(entry.graph, 32003))
        assert [m.exponents for m in a] == [m.exponents for m in b]


def test_initial_ideal_squarefree_assertion_fires():
    r = ring_for(1)
    bad = GroebnerBasis(ring=r, basis=(
        r.from_terms({r.monomial({0: 2}): 1}),))
    with pytest.raises(AlgebraError):
        initial_ideal(bad)


def test_dump_is_stable():
    gb = graph_groebner_basis(complete_graph(3), 32003)
    gb2 = graph_groebner_basis(complete_graph(3), 32003)
    assert gb.dump() == gb2.dump()
    assert "x2*y3 - x3*y2" in gb.dump().splitlines()
