"""Tests for `pvalg table`, plus the root options shared by every command."""

import json

from typer.testing import CliRunner

from pvalg._version import __version__
from pvalg.cli._app import app

runner = CliRunner()


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert result.stdout.strip() == f"pvalg {__version__}"


def test_table_list_text():
    result = runner.invoke(app, ["table", "list"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert len(lines) == 43
    assert lines[1] == "  1    1  K"
    assert lines[20] == " 20    6  K[x1,x2]/(x1x2, x1^3-x2^3)"
    assert lines[39].endswith("(generator x3x4 added; the printed row has dimension 7)")


def test_table_list_json():
    result = runner.invoke(app, ["--format", "json", "table", "list"])
    assert result.exit_code == 0, result.output
    rows = json.loads(result.stdout)
    assert len(rows) == 42
    assert rows[19] == {"index": 20, "dim": 6, "presentation": "K[x1,x2]/(x1x2, x1^3-x2^3)", "note": ""}


def test_table_show():
    result = runner.invoke(app, ["table", "show", "20"])
    assert result.exit_code == 0, result.output
    assert "entry 20: K[x1,x2]/(x1x2, x1^3-x2^3)" in result.stdout
    assert "dim: 6 (declared 6)" in result.stdout
    assert "hilbert function: (1, 2, 2, 1)" in result.stdout
    assert "socle dimension: 1" in result.stdout
    assert "square-zero radical: no" in result.stdout


def test_table_show_json():
    result = runner.invoke(app, ["-f", "json", "table", "show", "4"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["hilbert"] == [1, 2]
    assert report["square_zero_radical"] is True
    assert report["chain"] is False


def test_table_show_out_of_range():
    result = runner.invoke(app, ["table", "show", "43"])
    assert result.exit_code == 2
    assert "Error: parameters:" in result.stdout
    assert "between 1 and 42" in result.stdout


def test_output_file(tmp_path):
    out = tmp_path / "entry.json"
    result = runner.invoke(app, ["-f", "json", "-o", str(out), "table", "show", "2"])
    assert result.exit_code == 0, result.output
    assert "Wrote" in result.stdout
    assert json.loads(out.read_text())["dim"] == 2


def test_unknown_format():
    result = runner.invoke(app, ["-f", "yaml", "table", "list"])
    assert result.exit_code == 2
    assert "Error: config:" in result.stdout
