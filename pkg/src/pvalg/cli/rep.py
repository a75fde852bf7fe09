""":command:`pvalg rep`: the parameterized matrix of ``G(A)`` acting on ``A``."""

import json
from typing import Optional

import typer

from ._app import rep_app
from ._common import EXIT_NEGATIVE, config, emit, emit_report, input_errors, load_algebra, parse_assignments


def _matrix_text(cells) -> str:
    return "\n".join("[" + ", ".join(row) + "]" for row in cells)


@rep_app.command("matrix")
def rep_matrix(
    source: str = typer.Argument(..., help="A presentation, a table index, or an Algebra JSON file"),
    basis: Optional[str] = typer.Option(None, "--basis", "-b", help="Comma-separated quotient basis, e.g. 1,x1,x2,x1^2,x2^2,x1^3"),
    evaluate: Optional[str] = typer.Option(None, "--eval", "-e", help="Substitute parameter values, e.g. l1=2,a1=3"),
) -> None:
    """Print rho(l, a), symbolically or at given parameter values.

    Examples:
        pvalg rep matrix 20 --basis 1,x1,x2,x1^2,x2^2,x1^3 --format latex

        pvalg rep matrix 2 --eval l1=2,a1=3

    """
    from pvalg.core.rationals import format_rational
    from pvalg.hassett import evaluate_rep, evaluated_latex, matrix_rep, rep_to_model, to_latex

    cfg = config()
    with input_errors("rep"):
        _, a = load_algebra(source)
        override = [b.strip() for b in basis.split(",")] if basis else None
        rep = matrix_rep(a, override, cfg)
        values = parse_assignments(evaluate) if evaluate else None
        evaluated = evaluate_rep(rep, values) if values is not None else None

    if evaluated is None:
        if cfg.format == "json":
            emit(rep_to_model(rep).model_dump_json(indent=2))
        elif cfg.format == "latex":
            emit(to_latex(rep))
        else:
            header = f"basis: {', '.join(rep.basis_labels)}\nparameters: {', '.join(rep.variables)}"
            emit(header + "\n" + _matrix_text([[e.to_text() for e in row] for row in rep.entries]))
        return

    cells = [[format_rational(x) for x in row] for row in evaluated]
    if cfg.format == "json":
        emit(json.dumps({"n": rep.n, "values": parse_assignments(evaluate), "matrix": cells}, indent=2))
    elif cfg.format == "latex":
        emit(evaluated_latex(evaluated))
    else:
        emit(_matrix_text(cells))


def _verify_text(report) -> str:
    return "\n".join(
        [
            f"algebra: {report.source}",
            f"n: {report.n}",
            f"rho(1, 0) = I: {'yes' if report.identity_ok else 'no'}",
            f"homomorphism: {'yes' if report.homomorphism else 'no'}",
            f"det: {report.determinant}",
            f"expected det: {report.expected_determinant}",
        ]
    )


@rep_app.command("verify")
def rep_verify(
    source: str = typer.Argument(..., help="A presentation, a table index, or an Algebra JSON file"),
    basis: Optional[str] = typer.Option(None, "--basis", "-b", help="Comma-separated quotient basis"),
) -> None:
    """Check the group law and the determinant of rho symbolically.

    Exits 1 when a check fails.
    """
    from pvalg.core import linalg
    from pvalg.hassett import det_rep, evaluate_rep, expected_determinant, identity_values, matrix_rep, verify_homomorphism
    from pvalg.models import RepCheckReport

    cfg = config()
    with input_errors("rep"):
        label, a = load_algebra(source)
        rep = matrix_rep(a, [b.strip() for b in basis.split(",")] if basis else None, cfg)
        det, expected = det_rep(rep), expected_determinant(rep)
        report = RepCheckReport(
            source=label,
            n=rep.n,
            homomorphism=verify_homomorphism(rep),
            determinant=det.to_text(),
            expected_determinant=expected.to_text(),
            identity_ok=evaluate_rep(rep, identity_values(rep)) == linalg.identity(rep.n),
        )
    emit_report(report, _verify_text)
    if not (report.homomorphism and report.identity_ok and det == expected):
        raise typer.Exit(code=EXIT_NEGATIVE)
