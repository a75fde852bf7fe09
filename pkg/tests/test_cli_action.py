"""Tests for `pvalg action check`."""

import json

from typer.testing import CliRunner

from pvalg.cli._app import app

runner = CliRunner()


def test_hirzebruch():
    result = runner.invoke(app, ["action", "check", "hirzebruch", "--param", "d=1"])
    assert result.exit_code == 0, result.output
    assert "action: hirzebruch(d=1)" in result.stdout
    assert "axioms: ok" in result.stdout
    assert "linear: no" in result.stdout
    assert "fixed point: unknown" in result.stdout
    assert "orbit rank: 4 at (" in result.stdout


def test_expect_fixed_point_fails_when_undecided():
    result = runner.invoke(app, ["action", "check", "hirzebruch", "-p", "d=2", "--expect-fixed-point"])
    assert result.exit_code == 1


def test_expect_fixed_point_on_linear_action():
    result = runner.invoke(app, ["action", "check", "hirzebruch", "-p", "d=0", "--expect-fixed-point"])
    assert result.exit_code == 0, result.output
    assert "fixed point: yes" in result.stdout


def test_translations_have_no_fixed_point():
    result = runner.invoke(app, ["action", "check", "translations", "-p", "n=3", "--expect-fixed-point"])
    assert result.exit_code == 1
    assert "fixed point: no" in result.stdout
    assert "orbit rank: 3 at (" in result.stdout


def test_json_report():
    result = runner.invoke(app, ["-f", "json", "--seed", "5", "action", "check", "polex", "-p", "n=1"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["params"] == {"n": 1}
    assert report["parameter_count"] == 2
    assert report["has_fixed_point"] is True
    assert report["orbit_rank_at_witness"] == 2


def test_same_seed_same_output():
    first = runner.invoke(app, ["--seed", "9", "action", "check", "scalar", "-p", "n=3"])
    second = runner.invoke(app, ["--seed", "9", "action", "check", "scalar", "-p", "n=3"])
    assert first.exit_code == 0
    assert first.stdout == second.stdout


def test_action_file_violating_the_group_law(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps({"r": 0, "s": 1, "n": 1, "components": ["x1 + a1^2"], "name": "square"}))
    result = runner.invoke(app, ["action", "check", str(path)])
    assert result.exit_code == 1
    assert "axioms: violated" in result.stdout


def test_unknown_action():
    result = runner.invoke(app, ["action", "check", "rotation"])
    assert result.exit_code == 2
    assert "unknown action" in result.stdout


def test_non_integer_parameter():
    result = runner.invoke(app, ["action", "check", "hirzebruch", "-p", "d=x"])
    assert result.exit_code == 2
    assert "must be an integer" in result.stdout
