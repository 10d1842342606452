"""PBW normal forms checked against representations built outside the
package: differential operators for Weyl algebras, the gl2 vector-field model
and the adjoint action for enveloping algebras.  Invariant dimensions are
compared with the Molien series."""
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from ncbirat.ncalg import (AveragingUnavailable, act, casimir, commutative_family,
                           enveloping_family, family_from_string, filtration_piece,
                           graded_dimension, invariant_family, is_invariant,
                           monomials_up_to, piece_dimension, weyl_family)
from ncbirat.polycore import GF, DomainError
from ncbirat.rootsys import build_root_system, chevalley_constants
from oracles import SL2_X, SL2_Y, even_monomial_count, sl2_action, weyl_operator_action

# -- Weyl algebra ------------------------------------------------------------------

XS = sp.symbols("t1:3")
TEST_FUNCS = [XS[0] ** 3 * XS[1] ** 2 + 5 * XS[0] * XS[1], sp.Integer(1), XS[0] ** 4 - XS[1] ** 3 * XS[0]]


def weyl_element_action(el, f):
    n = el.family.nvars
    out = sp.Integer(0)
    for e, c in el.terms.items():
        word = [("x", i) for i in range(n) for _ in range(e[i])]
        word += [("y", i) for i in range(n) for _ in range(e[n + i])]
        out += sp.Rational(Fraction(c).numerator, Fraction(c).denominator) * weyl_operator_action(word, f, XS)
    return sp.expand(out)


letters = st.tuples(st.sampled_from("xy"), st.integers(0, 1))


@given(st.lists(letters, max_size=6))
@settings(max_examples=40, deadline=None)
def test_weyl_normal_form_matches_differential_operators(word):
    fam = weyl_family(2)
    el = fam.one()
    for kind, i in word:
        el = el * fam.gen(f"{kind}{i + 1}")
    for f in TEST_FUNCS:
        assert weyl_element_action(el, f) == sp.expand(weyl_operator_action(word, f, XS))


def test_weyl_relations():
    fam = weyl_family(2)
    x1, x2, y1, y2 = fam.gens()
    assert y1 * x1 - x1 * y1 == fam.one()
    assert y1 * x2 == x2 * y1
    assert x1 * x2 == x2 * x1 and y1 * y2 == y2 * y1


# -- U(sl2) --------------------------------------------------------------------------

SL2_FUNCS = [SL2_X ** 3 * SL2_Y ** 2, SL2_X * SL2_Y + SL2_Y ** 4, SL2_X ** 2]


def sl2_element_action(el, f):
    names = ["e", "h", "f"]
    out = sp.Integer(0)
    for e, c in el.terms.items():
        g = f
        for k in reversed(range(3)):
            for _ in range(e[k]):
                g = sl2_action(names[k], g)
        out += sp.Rational(Fraction(c).numerator, Fraction(c).denominator) * g
    return sp.expand(out)


@given(st.lists(st.sampled_from("ehf"), max_size=6))
@settings(max_examples=40, deadline=None)
def test_sl2_normal_form_matches_vector_field_model(word):
    fam = enveloping_family("A1")
    el = fam.one()
    for ch in word:
        el = el * fam.gen(f"{ch}.1")
    for f in SL2_FUNCS:
        g = f
        for ch in reversed(word):
            g = sl2_action(ch, g)
        assert sl2_element_action(el, f) == sp.expand(g)


def test_sl2_relations():
    fam = enveloping_family("A1")
    e, h, f = fam.gens()
    assert e * f - f * e == h
    assert h * e - e * h == e.scale(2)
    assert h * f - f * h == f.scale(-2)


def test_casimir_is_central():
    fam = enveloping_family("A1")
    z = casimir(fam)
    assert all(z * g == g * z for g in fam.gens())
    with pytest.raises(DomainError):
        casimir(enveloping_family("A1", GF(2)))


# -- adjoint representation for larger enveloping algebras ------------------------------

def ad_matrices(cb):
    d = cb.dimension
    mats = []
    for i in range(d):
        m = np.zeros((d, d), dtype=object)
        for j in range(d):
            for k, v in cb.bracket.get((i, j), {}).items():
                m[k, j] = v
        mats.append(m)
    return mats


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_enveloping_products_match_adjoint_action(label):
    fam = enveloping_family(label)
    cb = chevalley_constants(build_root_system(label))
    mats = ad_matrices(cb)
    d = cb.dimension
    rng = random.Random(7)
    for _ in range(15):
        word = [rng.randrange(d) for _ in range(rng.randint(1, 4))]
        el = fam.one()
        want = np.identity(d, dtype=object)
        for k in word:
            el = el * fam.gens()[k]
            want = want.dot(mats[k])
        got = np.zeros((d, d), dtype=object)
        for e, c in el.terms.items():
            m = np.identity(d, dtype=object)
            for k in range(d):
                for _ in range(e[k]):
                    m = m.dot(mats[k])
            got = got + m * Fraction(c)
        assert (got == want).all()


@given(st.lists(st.integers(0, 9), min_size=3, max_size=3))
@settings(max_examples=20, deadline=None)
def test_b2_associativity(idx):
    fam = enveloping_family("B2")
    a, b, c = (fam.gens()[i] for i in idx)
    assert (a * b) * c == a * (b * c)


def test_mod_p_family_has_same_relations():
    fam = enveloping_family("A1", GF(3))
    e, h, f = fam.gens()
    assert h * e - e * h == e.scale(2)


# -- invariants --------------------------------------------------------------------------

@pytest.mark.parametrize("j", range(0, 11))
def test_a1_invariant_piece_is_even_degree_count(j):
    assert piece_dimension(invariant_family("A1"), j) == even_monomial_count(2, j)
    assert filtration_piece(invariant_family("A1"), j).dimension == even_monomial_count(2, j)


def molien(label, dmax):
    """Invariant dimensions of Sym(V + V*) via Molien's formula."""
    from ncbirat.rootsys import weyl_group  # group enumeration only; the series is ours
    t = sp.Symbol("t")
    total = 0
    for g in weyl_group(build_root_system(label)):
        M = sp.Matrix(g.matrix)
        rho = sp.diag(M, M.inv().T)
        total += 1 / (sp.eye(rho.shape[0]) - t * rho).det()
    total = sp.simplify(total / len(weyl_group(build_root_system(label))))
    ser = sp.series(total, t, 0, dmax + 1).removeO()
    return [int(ser.coeff(t, d)) for d in range(dmax + 1)]


@pytest.mark.parametrize("label,dmax", [("A1", 6), ("A2", 4), ("B2", 4)])
def test_graded_invariant_dimensions_match_molien(label, dmax):
    fam = invariant_family(label)
    assert [graded_dimension(fam, d) for d in range(dmax + 1)] == molien(label, dmax)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_invariant_basis_is_invariant_and_methods_agree(label):
    fam = invariant_family(label)
    for d in range(0, 4):
        piece_avg = filtration_piece(fam, d, "average")
        piece_fix = filtration_piece(invariant_family(label), d, "fixed")
        assert piece_avg.dimension == piece_fix.dimension
        for v in piece_fix.basis:
            assert is_invariant(v)
            piece_avg.coordinates(v)  # raises if outside


def test_group_acts_by_automorphisms():
    fam = invariant_family("A2")
    x1, x2, y1, y2 = fam.gens()
    for g in fam.weyl_group:
        for a, b in [(y1, x1), (y2, x1), (y1, x2), (x1 * y2, y1 + x2)]:
            assert act(g, a * b) == act(g, a) * act(g, b)
        assert act(g, y1) * act(g, x1) - act(g, x1) * act(g, y1) == fam.one()


def test_averaging_unavailable_when_char_divides_order():
    fam = invariant_family("A1", GF(2))
    with pytest.raises(AveragingUnavailable):
        filtration_piece(fam, 2, "average")
    # the fixed-point route works: -1 = 1 so every monomial is invariant
    assert filtration_piece(fam, 2).dimension == len(monomials_up_to(2, 2))


def test_commutative_piece_dimensions():
    fam = commutative_family(3)
    assert [piece_dimension(fam, j) for j in range(5)] == [sp.binomial(j + 3, 3) for j in range(5)]


def test_family_strings():
    assert family_from_string("u:A1") == enveloping_family("A1")
    assert family_from_string("weyl:2").transcendence_degree() == 4
    assert family_from_string("enveloping:A2").transcendence_degree() == 8
    with pytest.raises(ValueError):
        family_from_string("nonsense:1")


def test_element_parsing_with_centers():
    fam = enveloping_family("A1")
    z = casimir(fam)
    assert fam.parse("z1 - e.1*f.1", [z]) == z - fam.gen("e.1") * fam.gen("f.1")
