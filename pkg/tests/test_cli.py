"""Tests for the command line front end and its reports."""

import json
from pathlib import Path

import pytest

from src.app.cli import FormSymApp
from src.app.reports import Report, emit, parse, render_pretty
from src.utils.constants import BANNER_GROUP_ORDER, BANNER_MAXIMAL


@pytest.fixture(autouse=True)
def settings_file(tmp_path, monkeypatch):
    path = tmp_path / "formsym_settings.json"
    monkeypatch.setenv("FORMSYM_CONFIG", str(path))
    return path


def run(capsys, *argv):
    code = FormSymApp(list(argv)).run()
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_two_dimensional_classification(capsys):
    code, out, _ = run(capsys, "binary-symm", "--poly", "p^3", "--degree", "3")
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "binary-symm"
    assert report["result"]["classification"] == "TwoDimensional"
    assert "projective_index" not in report["result"]


def test_pretty_cubic_symmetries(capsys):
    code, out, _ = run(capsys, "binary-symm", "--pretty", "--poly", "p^3+1", "--degree", "3")
    assert code == 0
    assert BANNER_MAXIMAL in out
    assert BANNER_GROUP_ORDER.format(6) in out


def test_cubic_symmetries_json(capsys):
    code, out, _ = run(capsys, "binary-symm", "--poly", "p^3+1", "--degree", "3")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["projective_index"] == 6
    assert len(result["symmetries"]) == 6
    assert result["symmetries"][0] == "(p)/(1)"


def test_explicit_map_matrix(capsys):
    code, out, _ = run(capsys, "binary-matrices", "--poly", "p^3+1", "--degree", "3",
                       "--map", "1/p")
    assert code == 0
    (entry,) = json.loads(out)["result"]["matrices"]
    assert entry["mu_text"] == "1"
    assert entry["matrix_text"] == [["0", "1"], ["1", "0"]]
    assert entry["mobius_text"] == "(1)/(p)"


def test_ternary_invariants(capsys):
    code, out, _ = run(capsys, "ternary", "--mode", "invariants", "--poly", "p^3-q^2",
                       "--degree", "3")
    assert code == 0
    invariants = json.loads(out)["result"]["invariants"]
    assert invariants["I1"] == "-1/6"
    assert set(invariants) == {"I1", "I2", "I3"}


def test_parse_error_reported_on_stderr(capsys):
    code, out, err = run(capsys, "binary-symm", "--poly", "2p", "--degree", "3")
    assert code == 1
    assert out == ""
    assert json.loads(err.strip().splitlines()[-1])["error"] == "PolynomialSyntaxError"


def test_missing_argument_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        FormSymApp(["binary-symm", "--degree", "3"])
    assert excinfo.value.code == 1


def test_degenerate_hessian_exit_code(capsys):
    code, _, err = run(capsys, "ternary", "--poly", "p^3+1", "--degree", "3")
    assert code == 2
    assert json.loads(err.strip().splitlines()[-1])["error"] == "HessianDegenerate"


def test_sum_of_powers_rejects_cubics(capsys):
    code, _, _ = run(capsys, "check-sum-of-powers", "--degree", "3")
    assert code == 1


def test_report_round_trip():
    report = Report("ternary", {"poly": "p*q", "degree": 3}, {"count": 6}, ["retried probe"])
    assert parse(emit(report)) == report


def test_pretty_rendering_lists_warnings():
    report = Report("ternary", {}, {"count": 6}, ["probe (0, 0) skipped"])
    text = render_pretty(report)
    assert "the number of symmetries=6" in text
    assert text.endswith("warning: probe (0, 0) skipped")


def test_report_matches_schema_keys(capsys):
    schema_path = Path(__file__).resolve().parent.parent / "schema" / "report.schema.json"
    schema = json.loads(schema_path.read_text(encoding="utf-8"))
    _, out, _ = run(capsys, "binary-symm", "--poly", "p^3", "--degree", "3")
    report = json.loads(out)
    assert set(schema["required"]) == set(report)
    assert report["command"] in schema["properties"]["command"]["enum"]


def test_weighted_cubic_keeps_projective_group(capsys):
    code, out, _ = run(capsys, "binary-symm", "--poly", "p^3+1", "--degree", "3", "--weight", "1")
    assert code == 0
    report = json.loads(out)
    assert report["input"]["weight"] == 1
    assert report["result"]["projective_index"] == 6
    assert report["result"]["full_index"] == 30
    assert len(report["result"]["symmetries"]) == 6


def test_weighted_matrix_lift(capsys):
    code, out, _ = run(capsys, "binary-matrices", "--poly", "p^3+1", "--degree", "3",
                       "--weight", "-1", "--map", "1/p")
    assert code == 0
    (entry,) = json.loads(out)["result"]["matrices"]
    assert entry["mu_root_text"] == "-1"
    assert entry["matrix_text"] == [["0", "-1"], ["-1", "0"]]
    assert entry["multiplicity"] == 1


@pytest.mark.slow
def test_exceptional_weight_index_is_infinite(capsys):
    code, out, _ = run(capsys, "binary-symm", "--pretty", "--poly", "p^4+1", "--degree", "4",
                       "--weight", "-2")
    assert code == 0
    assert "full index=infinite" in out
