"""Tests for `pvalg compare` and `pvalg sweep`."""

import json

import pytest
from typer.testing import CliRunner

from pvalg import table_algebra
from pvalg.algebras import algebra_to_model
from pvalg.cli._app import app

runner = CliRunner()


def test_separated():
    result = runner.invoke(app, ["compare", "3", "4"])
    assert result.exit_code == 0, result.output
    assert "separated by hilbert: (1,1,1) != (1,2)" in result.stdout


def test_inconclusive_exits_one():
    result = runner.invoke(app, ["compare", "11", "13"])
    assert result.exit_code == 1
    assert "inconclusive: dim, hilbert, socle_dim, ann_filtration, embedding_dim all agree" in result.stdout


def test_json_report():
    result = runner.invoke(app, ["-f", "json", "compare", "10", "12"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["result"] == "separated"
    assert report["invariant"] == "socle_dim"
    assert (report["left_value"], report["right_value"]) == ("1", "2")


def test_presentation_against_file(tmp_path):
    path = tmp_path / "chain.json"
    path.write_text(algebra_to_model(table_algebra(5)).model_dump_json())
    result = runner.invoke(app, ["compare", "K[x1]/(x1^4)", str(path)])
    assert result.exit_code == 1
    assert "inconclusive" in result.stdout


def test_non_local_algebra_is_an_input_error():
    result = runner.invoke(app, ["compare", "K[x1]/(x1^2-x1)", "2"])
    assert result.exit_code == 2
    assert "Error: locality:" in result.stdout


@pytest.mark.slow
def test_sweep_inconclusive_only():
    result = runner.invoke(app, ["sweep", "--inconclusive-only", "--workers", "2"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == "a,b,dim_a,dim_b,result,invariant,left,right"
    assert "11,13,5,5,inconclusive,,," in lines


@pytest.mark.slow
def test_sweep_json():
    result = runner.invoke(app, ["-f", "json", "sweep"])
    assert result.exit_code == 0, result.output
    rows = json.loads(result.stdout)
    assert len(rows) == 861
    assert rows[0]["a"] == 1 and rows[0]["b"] == 2
