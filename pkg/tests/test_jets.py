"""Jet algebras: colengths, normal forms, membership witnesses."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from curveinv.errors import NotInIdeal, TruncationCapExceeded
from curveinv.jets import (
    JetAlgebra,
    build_jet_algebra,
    staircase_colength,
)
from curveinv.poly import Poly, parse_poly

UV = ("u", "v")


def P(src):
    return parse_poly(src, UV)


def jacobian(src):
    f = P(src)
    return [f.diff("u"), f.diff("v")]


# -- colength ---------------------------------------------------------------

def test_maximal_ideal():
    J = build_jet_algebra([P("u"), P("v")], truncation_order=3)
    assert J.basis == ((0, 0),)
    assert J.colength() == 1


def test_monomial_staircase():
    J = build_jet_algebra([P("u^2"), P("v^3")], truncation_order=6)
    assert J.colength() == 6
    assert set(J.basis) == {(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)}


def test_cusp_jacobian():
    J = build_jet_algebra(jacobian("u^2+v^3"), truncation_order=6)
    assert J.colength() == 2
    assert set(J.basis) == {(0, 0), (0, 1)}


@pytest.mark.parametrize("n", range(1, 11))
def test_a_series_colength(n):
    J = build_jet_algebra(jacobian(f"u^2+v^{n + 1}"))
    assert J.colength() == n


def test_e7_colength():
    assert build_jet_algebra(jacobian("u^3+u*v^3"), truncation_order=10).colength() == 7


def test_node_tjurina_ideal():
    f = P("u*v")
    J = build_jet_algebra([f, f.diff("u"), f.diff("v")])
    assert J.colength() == 1


def test_not_m_primary_hits_cap():
    with pytest.raises(TruncationCapExceeded):
        build_jet_algebra([P("u")], cap=16)


# -- stabilization ----------------------------------------------------------

@pytest.mark.parametrize("src", ["u^2+v^3", "u^3+v^5", "u^3+u*v^3", "u^5+v^5+u^3*v^3"])
def test_colength_stable_under_truncation_raise(src):
    gens = jacobian(src)
    J = build_jet_algebra(gens)
    T = J.truncation_order
    for bump in (1, 2):
        assert JetAlgebra(gens, T + bump).colength() == J.colength()


# -- normal form ------------------------------------------------------------

def test_normal_form_examples():
    J = build_jet_algebra(jacobian("u^2+v^3"), truncation_order=8)
    # u^2*v^5 is divisible by u, hence in (2u, 3v^2); only v survives
    coords = J.normal_form(P("v + u^2*v^5"))
    assert coords == [Fraction(0), Fraction(1)]
    assert J.normal_form(Poly.zero(UV)) == [0, 0]
    for g in J.generators:
        assert J.normal_form(g) == [0, 0]


small_polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(lambda c: c != 0),
    max_size=4,
).map(lambda terms: Poly(UV, terms))


@settings(max_examples=40)
@given(small_polys, small_polys,
       st.fractions(min_value=-3, max_value=3, max_denominator=4),
       st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_normal_form_linear(p, q, a, b):
    J = build_jet_algebra(jacobian("u^3+v^5"), truncation_order=10)
    nf_p = J.normal_form(p)
    nf_q = J.normal_form(q)
    combo = J.normal_form(p.scale(a) + q.scale(b))
    assert combo == [a * x + b * y for x, y in zip(nf_p, nf_q)]


# -- staircase oracle -------------------------------------------------------

exponent_pairs = st.tuples(st.integers(0, 4), st.integers(0, 4))


@settings(max_examples=30)
@given(
    st.integers(1, 5),
    st.integers(1, 5),
    st.lists(exponent_pairs, max_size=3),
)
def test_monomial_ideal_matches_staircase_count(a, b, extra):
    gens = [P(f"u^{a}"), P(f"v^{b}")] + [
        Poly(UV, {mono: 1}) for mono in extra if mono != (0, 0)
    ]
    J = build_jet_algebra(gens)
    assert J.colength() == staircase_colength(gens)


# -- membership witnesses ---------------------------------------------------

def test_witness_node():
    J = build_jet_algebra([P("v"), P("u")], truncation_order=8)
    w = J.membership_with_witness(P("u*v"), 4)
    assert w.cofactors[0] * P("v") + w.cofactors[1] * P("u") == P("u*v")
    assert w.order_verified == 4


def test_witness_cusp_euler():
    J = build_jet_algebra([P("2*u"), P("3*v^2")], truncation_order=10)
    w = J.membership_with_witness(P("u^2+v^3"), 6)
    assert w.cofactors == (P("1/2*u"), P("1/3*v"))


def test_witness_e8_high_order():
    f = P("u^3+v^5")
    J = build_jet_algebra(jacobian("u^3+v^5"), truncation_order=18)
    target = f * P("v^3")
    w = J.membership_with_witness(target, 12)
    defect = target - w.cofactors[0] * f.diff("u") - w.cofactors[1] * f.diff("v")
    assert defect.is_zero() or defect.order() > 12


def test_witness_rejects_non_member():
    J = build_jet_algebra(jacobian("u^2+v^3"), truncation_order=8)
    with pytest.raises(NotInIdeal):
        J.membership_with_witness(P("v"), 4)


def test_witness_order_out_of_certified_range():
    J = build_jet_algebra(jacobian("u^2+v^3"), truncation_order=8)
    with pytest.raises(ValueError):
        J.membership_with_witness(P("u"), 100)


def test_row_seed_changes_nothing_semantically():
    gens = jacobian("u^3+v^5")
    J0 = build_jet_algebra(gens, truncation_order=14)
    J1 = build_jet_algebra(gens, truncation_order=14, row_seed=7)
    assert J0.basis == J1.basis
    assert J0.colength() == J1.colength()
