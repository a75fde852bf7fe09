""":command:`pvalg action`: check the axioms and properties of a polynomial action."""

from pathlib import Path
from typing import List, Optional

import typer

from pvalg.core.errors import ParameterError

from ._app import action_app
from ._common import EXIT_NEGATIVE, config, emit_report, input_errors, parse_assignments, yes_no


def _check_text(report) -> str:
    return "\n".join(
        [
            f"action: {report.name}",
            f"space dimension: {report.n}",
            f"parameters: {report.parameter_count}",
            f"axioms: {'ok' if report.axioms_ok else 'violated'}",
            f"linear: {yes_no(report.linear)}",
            f"fixed point: {yes_no(report.has_fixed_point)}",
            f"orbit rank: {report.orbit_rank_at_witness} at ({', '.join(report.witness)})",
        ]
    )


def _int_params(items: List[str]) -> dict:
    params = {}
    for item in items:
        for key, value in parse_assignments(item).items():
            try:
                params[key] = int(value)
            except ValueError:
                raise ParameterError(f"parameter '{key}' must be an integer, got '{value}'") from None
    return params


@action_app.command("check")
def action_check(
    name: str = typer.Argument(..., help="translations, hirzebruch, polex, scalar, table_rep, or an Action JSON file"),
    param: Optional[List[str]] = typer.Option(None, "--param", "-p", help="Builtin parameter, e.g. d=1 (repeatable)"),
    expect_fixed_point: bool = typer.Option(False, "--expect-fixed-point", help="Exit 1 unless a fixed point is proven to exist"),
) -> None:
    """Verify the action axioms and report linearity, fixed points and orbit rank.

    Exits 1 when the axioms fail, or with --expect-fixed-point when no
    fixed point is proven.

    Examples:
        pvalg action check hirzebruch --param d=1

        pvalg action check translations -p n=3 --expect-fixed-point

    """
    from pvalg.actions import action_from_model, analyze_action, builtin
    from pvalg.models import ActionModel

    with input_errors("action"):
        params = _int_params(param or [])
        if name.endswith(".json"):
            act = action_from_model(ActionModel.model_validate_json(Path(name).read_text(encoding="utf-8")))
        else:
            act = builtin(name, params)
        report = analyze_action(act, config(), params).to_model()
    emit_report(report, _check_text)
    if not report.axioms_ok or (expect_fixed_point and report.has_fixed_point is not True):
        raise typer.Exit(code=EXIT_NEGATIVE)
