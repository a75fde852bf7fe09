""":command:`pvalg reconstruct`: recover an algebra from a prehomogeneous commutative matrix group."""

from pathlib import Path
from typing import Optional

import typer

from ._app import app
from ._common import EXIT_NEGATIVE, config, emit_report, fail, input_errors, parse_vector


def _reconstruct_text(report) -> str:
    lines = [f"status: {report.status}"]
    if report.message:
        lines.append(f"reason: {report.message}")
    if report.commutant_dim is not None:
        lines.append(f"commutant dimension: {report.commutant_dim}")
    if report.witness is not None:
        lines.append(f"vector: ({', '.join(report.witness)})")
    if report.algebra is not None:
        alg = report.algebra
        lines.append(f"unit: ({', '.join(alg.unit)})")
        for i, row in enumerate(alg.structure):
            for j, vec in enumerate(row):
                if j >= i:
                    lines.append(f"{alg.basis[i]}*{alg.basis[j]} = ({', '.join(vec)})")
    return "\n".join(lines)


@app.command("reconstruct")
def reconstruct(
    matrices: Path = typer.Option(..., "--matrices", "-m", help="MatrixGroup JSON file: n, lie_basis, optional base_point"),
    vector: Optional[str] = typer.Option(None, "--vector", help="Point of the open orbit, e.g. 1,0; defaults to the base point, then a seeded search"),
) -> None:
    """Rebuild the algebra structure on V from the commutant of Lie(G).

    Exits 1 when the group is well formed but the construction does not
    apply (commutant of the wrong dimension or not commutative, vector not
    cyclic).

    Example:
        pvalg reconstruct --matrices rep2.json --vector 1,0

    """
    from pvalg.algebras.finite import algebra_to_model
    from pvalg.core.errors import DimensionMismatchError, NonCommutativeCommutantError, NotCyclicError
    from pvalg.core.rationals import format_rational
    from pvalg.models import MatrixGroupModel, ReconstructionReport
    from pvalg.prehom import commutant, group_from_model, reconstruct_algebra

    with input_errors("input"):
        model = MatrixGroupModel.model_validate_json(matrices.read_text(encoding="utf-8"))
        inp = group_from_model(model)
        point = parse_vector(vector) if vector is not None else None
    if point is not None and len(point) != inp.n:
        fail("input", f"vector has {len(point)} coordinates, module has dimension {inp.n}")

    statuses = {
        DimensionMismatchError: "dimension_mismatch",
        NonCommutativeCommutantError: "noncommutative_commutant",
        NotCyclicError: "not_cyclic",
    }
    try:
        result = reconstruct_algebra(inp, point, config=config())
    except (DimensionMismatchError, NonCommutativeCommutantError, NotCyclicError) as exc:
        report = ReconstructionReport(status=statuses[type(exc)], message=str(exc), commutant_dim=len(commutant(inp)))
        emit_report(report, _reconstruct_text)
        raise typer.Exit(code=EXIT_NEGATIVE) from exc

    report = ReconstructionReport(
        status="reconstructed",
        witness=[format_rational(x) for x in result.witness],
        commutant_dim=inp.n,
        algebra=algebra_to_model(result.algebra),
    )
    emit_report(report, _reconstruct_text)
