"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines inline.
Criterion 8 is split: the verdict-agreement half passes; the vanishing
half is implemented faithfully and expected to fail on singular models
(see the left-edge survivor note in the README), so it is marked xfail.
"""

import json
import time

import pytest

from conftest import analyzed_model
from curveinv import corpus
from curveinv.branches import delta_report
from curveinv.jets import build_jet_algebra, staircase_colength
from curveinv.plane import PlaneAnalysis, PlaneSingularity
from curveinv.poly import parse_poly
from curveinv.report import AnalysisOptions, analyze, to_json
from curveinv.schema import build_curve, load_curve, serialize_curve
from curveinv.spectral import ExactDim, Verdict

UV = ("u", "v")

ALL_MODEL_LABELS = [doc["label"] for doc in corpus.curve_models()]
PLANAR_BRANCH_MODELS = [
    "nodal-rational", "cuspidal-cubic", "tacnodal-rational", "a4-rational",
    "e8-rational", "two-sing-genus-1", "smooth-genus-2", "elliptic-smooth",
    "nonqh-quintic-model",
]
QH_MODELS = [
    "nodal-rational", "cuspidal-cubic", "tacnodal-rational", "a4-rational",
    "e8-rational", "two-sing-genus-1",
]


def _zoo_analyses():
    out = []
    for doc in corpus.zoo():
        sing = build_curve(
            {"genus": 0, "label": doc["label"], "singularities": [doc]}
        ).singularities[0]
        out.append((doc["label"], PlaneAnalysis(sing)))
    return out


def _report(label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {label}: {status}" + (f" — {detail}" if detail else ""))
    assert ok, detail


def test_criterion_01_ade_zoo_mu_tau_and_staircase():
    start = time.monotonic()
    monomial_jacobian = {f"A{n}" for n in range(1, 11)} | {"E6", "E8"}
    for label, analysis in _zoo_analyses():
        if label == "nonQH-quintic":
            continue
        mu, tau = analysis.milnor_tjurina()
        assert mu == tau, label
        assert analysis.saito_test(), label
        if label in monomial_jacobian:
            gens = [analysis.f_u, analysis.f_v]
            assert staircase_colength(gens) == mu, label
    elapsed = time.monotonic() - start
    _report(
        "1 (ADE zoo)",
        elapsed < 10.0,
        f"all mu = tau with QH true; staircase oracle agrees; {elapsed:.2f}s",
    )


def test_criterion_02_milnor_formula():
    checked = 0
    for doc in corpus.curve_models():
        curve = build_curve(doc)
        for sing in curve.singularities:
            if not isinstance(sing, PlaneSingularity) or not sing.branches:
                continue
            mu, _ = PlaneAnalysis(sing).milnor_tjurina()
            rep = delta_report(sing, mu)  # raises MilnorMismatch on failure
            assert mu == 2 * rep.delta - rep.r + 1
            checked += 1
    _report("2 (Milnor formula)", checked >= 5, f"{checked} germs, zero tolerance")


def test_criterion_03_tail_dimensions():
    for label, analysis in _zoo_analyses():
        _, tau = analysis.milnor_tjurina()
        kernel_dim, cokernel_dim, _, _ = analysis.mult_by_f()
        assert kernel_dim == cokernel_dim == tau, label
        tail = analysis.tail_map_general()
        assert len(tail.source_basis) == len(tail.target_basis) == tau, label
    _report("3 (tail dimensions)", True, "ker = coker = tau on every zoo entry")


def test_criterion_04_scalar_general_agreement():
    for label, analysis in _zoo_analyses():
        general = analysis.tail_map_general()
        for seed in (1, 5):
            assert analysis.tail_map_general(row_seed=seed).matrix == general.matrix, label
        if analysis.effective_weights is not None:
            assert analysis.tail_map_wh_scalar().matrix == general.matrix, label
    _report(
        "4 (scalar/general d1)",
        True,
        "entry-by-entry agreement plus witness independence",
    )


def test_criterion_05_qh_full_rank():
    for label, analysis in _zoo_analyses():
        if analysis.saito_test():
            _, tau = analysis.milnor_tjurina()
            assert analysis.tail_map_general().rank == tau, label
    _report("5 (QH full rank)", True, "tail rank equals tau on every QH entry")


def test_criterion_06_degeneration_verdicts():
    assert analyzed_model("nodal-rational").verdict.verdict is Verdict.DEGENERATES
    assert analyzed_model("cuspidal-cubic").verdict.verdict is Verdict.DEGENERATES
    assert analyzed_model("nonqh-quintic-model").verdict.verdict is Verdict.FAILS_VIA_TAU
    nonplanar = analyzed_model("nonplanar-t469")
    assert nonplanar.verdict.verdict is Verdict.FAILS_VIA_NONPLANAR
    lci = nonplanar.model.lci_records()[0]
    assert lci.report.obstruction_position == (4, -1)
    assert lci.report.total_degree == 3
    _report("6 (verdicts)", True, "all four verdict classes as expected")


def test_criterion_07_ledger_equivalence():
    for label in PLANAR_BRANCH_MODELS:
        v = analyzed_model(label).verdict
        assert v.ledger_consistent is True, label
        degenerates = v.verdict is Verdict.DEGENERATES
        assert (v.ledger_tau_total == v.ledger_rhs) == degenerates, label
    _report(
        "7 (ledger equivalence)",
        True,
        "Degenerates iff tau_total = 2*delta - R on every branch-data model",
    )


def test_criterion_08a_hc_verdict_agreement():
    for label in ALL_MODEL_LABELS:
        report = analyzed_model(label)
        assert report.hc.verdict is report.verdict.verdict, label
    _report("8a (HC verdict agreement)", True, "HC verdict = Hodge verdict everywhere")


@pytest.mark.xfail(
    strict=True,
    reason=(
        "faithful computation: for a singular model the left-most tail pair "
        "loses its source column when m >= 3, so its target of dimension tau "
        "survives at filtration position (0, -m+2); the page is not zero"
    ),
)
def test_criterion_08b_hc_vanishing_for_m_at_least_3():
    failures = []
    for label in QH_MODELS:
        hc = analyzed_model(label).hc
        for m in (3, 4):
            nonzero = [
                pos
                for pos, entry in hc.page(m).entry_map().items()
                if not (isinstance(entry, ExactDim) and entry.value == 0)
            ]
            if nonzero:
                failures.append((label, m, nonzero))
    ok = not failures
    status = "PASS" if ok else "FAIL (expected)"
    print(f"ACCEPTANCE 8b (HC vanishing m>=3): {status} — {failures}")
    assert ok


def test_criterion_09_stabilization():
    for label, analysis in _zoo_analyses():
        sing = analysis.sing
        raised = PlaneAnalysis(
            sing, truncation=analysis.milnor.truncation_order + 2
        )
        assert raised.milnor_tjurina() == analysis.milnor_tjurina(), label
        assert raised.tail_map_general().matrix == analysis.tail_map_general().matrix, label
    _report(
        "9 (stabilization)",
        True,
        "colengths and tail matrices unchanged at truncation + 2",
    )


def test_criterion_10_round_trips_and_determinism(tmp_path):
    for doc in corpus.curve_models():
        first = build_curve(doc)
        path = tmp_path / "doc.json"
        path.write_text(serialize_curve(first))
        assert load_curve(str(path)) == first
        source = parse_poly(doc["singularities"][0]["f"], UV) if (
            doc["singularities"] and doc["singularities"][0]["kind"] == "plane"
        ) else None
        if source is not None:
            assert parse_poly(str(source), UV) == source
    for label in ("nodal-rational", "mixed-node-t469"):
        docs = {d["label"]: d for d in corpus.curve_models()}
        a = to_json(analyze(build_curve(docs[label]), AnalysisOptions()))
        b = to_json(analyze(build_curve(docs[label]), AnalysisOptions()))
        assert a == b, label
    _report("10 (round trips)", True, "schema and parser round-trip; byte-identical reports")
