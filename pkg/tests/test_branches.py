"""Branch geometry: semigroups, conductors, delta, Milnor's formula."""

import pytest

from curveinv.branches import (
    branch_semigroup,
    delta_one_branch,
    delta_report,
    intersection_multiplicity,
)
from curveinv.errors import (
    MilnorMismatch,
    MissingBranchEquation,
    NotTransverseAtOrder,
    SchemaError,
)
from curveinv.plane import Branch, PlaneAnalysis, PlaneSingularity
from curveinv.poly import parse_branch, parse_poly

UV = ("u", "v")


def P(src):
    return parse_poly(src, UV)


def sing(src, branch_specs):
    branches = tuple(
        Branch(parse_branch(images), P(eq) if eq else None)
        for images, eq in branch_specs
    )
    return PlaneSingularity(P(src), branches=branches)


# -- semigroups -------------------------------------------------------------

def test_cusp_semigroup():
    values = branch_semigroup(parse_branch(["t^2", "t^3"]), 12)
    assert values == set(range(13)) - {1}


def test_smooth_branch_semigroup():
    values = branch_semigroup(parse_branch(["t", "0"]), 8)
    assert values == set(range(9))


def test_e8_branch_semigroup_gaps():
    values = branch_semigroup(parse_branch(["t^3", "t^5"]), 20)
    assert sorted(set(range(21)) - values) == [1, 2, 4, 7]


def test_semigroup_closed_under_addition():
    values = branch_semigroup(parse_branch(["t^4", "t^6+t^7"]), 30)
    for a in values:
        for b in values:
            if a + b <= 30:
                assert a + b in values


def test_delta_one_branch_values():
    assert delta_one_branch(parse_branch(["t^2", "t^3"]), 16) == 1
    assert delta_one_branch(parse_branch(["t", "0"]), 8) == 0
    assert delta_one_branch(parse_branch(["t^3", "t^5"]), 24) == 4


def test_delta_stable_under_order_raise():
    b = parse_branch(["t^3", "t^5"])
    assert delta_one_branch(b, 24) == delta_one_branch(b, 28)


# -- intersection multiplicities -------------------------------------------

def test_intersection_examples():
    assert intersection_multiplicity(P("v"), parse_branch(["t", "t^2"]), 8) == 2
    assert intersection_multiplicity(P("u-v"), parse_branch(["t", "t^3"]), 8) == 1


def test_intersection_error_when_branch_lies_on_curve():
    with pytest.raises(NotTransverseAtOrder):
        intersection_multiplicity(P("u"), parse_branch(["0", "t"]), 8)


# -- delta reports ----------------------------------------------------------

def _report(src, branch_specs):
    s = sing(src, branch_specs)
    mu, _ = PlaneAnalysis(s).milnor_tjurina()
    return delta_report(s, mu)


def test_node_report():
    rep = _report("u*v", [(["t", "0"], "v"), (["0", "t"], "u")])
    assert (rep.delta, rep.r) == (1, 2)
    assert rep.per_branch_delta == (0, 0)
    assert rep.pairwise_intersections[0][1] == 1


def test_cusp_report():
    rep = _report("u^2-v^3", [(["t^3", "t^2"], None)])
    assert (rep.delta, rep.r) == (1, 1)


def test_tacnode_report():
    rep = _report(
        "u^2-v^4",
        [(["t^2", "t"], "u-v^2"), (["-1*t^2", "t"], "u+v^2")],
    )
    assert (rep.delta, rep.r) == (2, 2)
    assert rep.pairwise_intersections[0][1] == 2


def test_e8_report():
    rep = _report("u^3-v^5", [(["t^5", "t^3"], None)])
    assert (rep.delta, rep.r) == (4, 1)


def test_milnor_formula_on_all_reports():
    cases = [
        ("u*v", [(["t", "0"], "v"), (["0", "t"], "u")]),
        ("u^2-v^3", [(["t^3", "t^2"], None)]),
        ("u^2-v^5", [(["t^5", "t^2"], None)]),
        ("u^3-v^5", [(["t^5", "t^3"], None)]),
    ]
    for src, specs in cases:
        s = sing(src, specs)
        mu, _ = PlaneAnalysis(s).milnor_tjurina()
        rep = delta_report(s, mu)
        assert mu == 2 * rep.delta - rep.r + 1


def test_wrong_branch_rejected():
    s = sing("u^2-v^3", [(["t^2", "t^3"], None)])  # images swapped
    with pytest.raises(SchemaError):
        delta_report(s, 2)


def test_bad_mu_raises_mismatch():
    s = sing("u^2-v^3", [(["t^3", "t^2"], None)])
    with pytest.raises(MilnorMismatch):
        delta_report(s, 5)


def test_missing_equation_for_pairwise():
    s = sing("u*v", [(["t", "0"], None), (["0", "t"], None)])
    with pytest.raises(MissingBranchEquation):
        delta_report(s, 1)
