"""CLI surface: subcommands, formats, exit codes, determinism."""

import json

import pytest

from curveinv import corpus
from curveinv.cli import main
from curveinv.report import AnalysisOptions, analyze, to_json
from curveinv.schema import build_curve, load_curve, serialize_curve


@pytest.fixture
def nodal_file(tmp_path):
    docs = {doc["label"]: doc for doc in corpus.curve_models()}
    path = tmp_path / "nodal.json"
    path.write_text(json.dumps(docs["nodal-rational"]))
    return str(path)


def test_analyze_text(nodal_file, capsys):
    assert main(["analyze", nodal_file]) == 0
    out = capsys.readouterr().out
    assert "verdict: Degenerates" in out
    assert "milnor-formula" in out


def test_analyze_json_like(nodal_file, capsys):
    assert main(["analyze", nodal_file, "--format", "json-like"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"]["value"] == "Degenerates"
    assert doc["global_invariants"]["tau_total"]["value"] == 1


def test_analyze_options(nodal_file, capsys):
    code = main(
        ["analyze", nodal_file, "--truncation", "12",
         "--hc-window", "0,2", "--tail-window", "2", "--format", "json-like"]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert sorted(doc["pages"]["hc"]) == ["0", "1", "2"]


def test_sing_quick_mode(capsys):
    assert main(["sing", "u^3+v^5"]) == 0
    out = capsys.readouterr().out
    assert "mu = 8, tau = 8" in out
    assert "(1/3, 1/5)" in out


def test_sing_custom_variables(capsys):
    assert main(["sing", "a*b", "--vars", "a,b"]) == 0
    assert "mu = 1, tau = 1" in capsys.readouterr().out


def test_corpus_runs_clean(capsys):
    assert main(["corpus"]) == 0
    out = capsys.readouterr().out
    assert "FailsViaTau" in out and "Degenerates" in out
    assert "FAIL" not in out


def test_parse_error_exit_2(capsys):
    assert main(["sing", "u^2 +"]) == 2


def test_schema_error_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"genus": 0, "singularities": [{"kind": "plane", '
                    '"f": "u*v", "variables": ["u", "v", "w"]}]}')
    assert main(["analyze", str(path)]) == 2


def test_missing_file_exit_2(capsys):
    assert main(["analyze", "/no/such/file.json"]) == 2


def test_non_isolated_exit_3(capsys):
    assert main(["sing", "u^2"]) == 3


# -- round trips and determinism -------------------------------------------

def test_schema_round_trip(tmp_path):
    for doc in corpus.curve_models():
        first = build_curve(doc)
        path = tmp_path / "roundtrip.json"
        path.write_text(serialize_curve(first))
        second = load_curve(str(path))
        assert first == second


def test_reports_byte_identical():
    for doc in corpus.curve_models():
        a = to_json(analyze(build_curve(doc), AnalysisOptions()))
        b = to_json(analyze(build_curve(doc), AnalysisOptions()))
        assert a == b
