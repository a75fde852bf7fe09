"""Tests for `pvalg rep matrix` and `pvalg rep verify`."""

import json

from typer.testing import CliRunner

from pvalg.cli._app import app

runner = CliRunner()

ENTRY_20_BASIS = "1,x1,x2,x1^2,x2^2,x1^3"


def test_matrix_text():
    result = runner.invoke(app, ["rep", "matrix", "2"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines() == ["basis: 1, x1", "parameters: l1, a1", "[l1, 0]", "[l1*a1, l1]"]


def test_matrix_evaluated():
    result = runner.invoke(app, ["rep", "matrix", "2", "--eval", "l1=2,a1=3"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines() == ["[2, 0]", "[6, 2]"]


def test_matrix_evaluated_json():
    result = runner.invoke(app, ["-f", "json", "rep", "matrix", "2", "-e", "l1=1/2,a1=0"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["matrix"] == [["1/2", "0"], ["0", "1/2"]]


def test_matrix_json():
    result = runner.invoke(app, ["-f", "json", "rep", "matrix", "20", "--basis", ENTRY_20_BASIS])
    assert result.exit_code == 0, result.output
    model = json.loads(result.stdout)
    assert model["n"] == 6
    assert model["torus_params"] == ["l1"]
    assert model["additive_params"] == ["a1", "a2", "a3", "a4", "a5"]
    assert model["basis"] == ENTRY_20_BASIS.split(",")
    assert model["entries"][1][0] == "l1*a1"


def test_matrix_latex():
    result = runner.invoke(app, ["--format", "latex", "rep", "matrix", "20", "-b", ENTRY_20_BASIS])
    assert result.exit_code == 0, result.output
    assert result.stdout.startswith("\\begin{pmatrix}")
    assert "\\alpha_{5}" in result.stdout
    assert len(result.stdout.strip().splitlines()) == 8


def test_matrix_bad_basis():
    result = runner.invoke(app, ["rep", "matrix", "20", "--basis", "1,x1"])
    assert result.exit_code == 2
    assert "Error: basis:" in result.stdout


def test_matrix_zero_torus_value():
    result = runner.invoke(app, ["rep", "matrix", "2", "--eval", "l1=0,a1=1"])
    assert result.exit_code == 2
    assert "non-zero" in result.stdout


def test_matrix_malformed_assignment():
    result = runner.invoke(app, ["rep", "matrix", "2", "--eval", "l1"])
    assert result.exit_code == 2
    assert "expected name=value" in result.stdout


def test_verify():
    result = runner.invoke(app, ["rep", "verify", "20", "--basis", ENTRY_20_BASIS])
    assert result.exit_code == 0, result.output
    assert "homomorphism: yes" in result.stdout
    assert "det: l1^6" in result.stdout
    assert "expected det: l1^6" in result.stdout


def test_verify_json_split_algebra():
    result = runner.invoke(app, ["-f", "json", "rep", "verify", "K[x1]/(x1^3-x1)"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["n"] == 3
    assert report["homomorphism"] is True
    assert report["identity_ok"] is True
    assert report["determinant"] == "l1*l2*l3"
