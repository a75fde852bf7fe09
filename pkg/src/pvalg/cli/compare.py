""":command:`pvalg compare` and :command:`pvalg sweep`: non-isomorphism certificates."""

import json

import typer

from ._app import app
from ._common import EXIT_NEGATIVE, config, emit, emit_report, input_errors, load_algebra


def _compare_text(report) -> str:
    lines = [f"A: {report.left}", f"B: {report.right}"]
    if report.result == "separated":
        lines.append(f"separated by {report.invariant}: {report.left_value} != {report.right_value}")
    else:
        lines.append(f"inconclusive: {', '.join(report.checked)} all agree")
    return "\n".join(lines)


@app.command("compare")
def compare(
    a: str = typer.Argument(..., help="First algebra: presentation, table index or Algebra JSON file"),
    b: str = typer.Argument(..., help="Second algebra"),
) -> None:
    """Certify that two algebras are not isomorphic.

    Exits 0 with the separating invariant, or 1 when every invariant agrees.

    Example:
        pvalg compare 3 4

    """
    from pvalg.algebras import Separation, certify_nonisomorphic
    from pvalg.models import SeparationReport

    with input_errors("compare"):
        label_a, alg_a = load_algebra(a)
        label_b, alg_b = load_algebra(b)
        outcome = certify_nonisomorphic(alg_a, alg_b)
    if isinstance(outcome, Separation):
        left_value, right_value = outcome.rendered()
        report = SeparationReport(
            left=label_a,
            right=label_b,
            result="separated",
            invariant=outcome.invariant,
            left_value=left_value,
            right_value=right_value,
        )
    else:
        report = SeparationReport(left=label_a, right=label_b, result="inconclusive", checked=list(outcome.checked))
    emit_report(report, _compare_text)
    if report.result != "separated":
        raise typer.Exit(code=EXIT_NEGATIVE)


@app.command("sweep")
def sweep(
    inconclusive_only: bool = typer.Option(False, "--inconclusive-only", help="Keep only the pairs no invariant separates"),
    workers: int = typer.Option(0, "--workers", "-w", help="Thread count; 0 lets the executor decide"),
) -> None:
    """Compare all 861 pairs of table entries.

    Text output is CSV with columns a, b, dim_a, dim_b, result, invariant, left, right.
    """
    from dataclasses import replace

    import polars as pl

    from pvalg.algebras.sweep import pairwise_sweep
    from pvalg.models import SweepRow

    with input_errors("sweep"):
        cfg = replace(config(), workers=workers or None)
        frame = pairwise_sweep(config=cfg)
    if inconclusive_only:
        frame = frame.filter(pl.col("result") == "inconclusive")
    if cfg.format == "json":
        emit(json.dumps([SweepRow.model_validate(row).model_dump() for row in frame.to_dicts()], indent=2))
    else:
        emit(frame.write_csv().rstrip("\n"))
