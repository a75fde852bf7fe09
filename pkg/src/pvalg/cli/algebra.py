""":command:`pvalg algebra`: decomposition, invariants and orbit count of one algebra."""

import typer

from ._app import algebra_app
from ._common import config, emit_report, input_errors, load_algebra, yes_no


def _info_text(info) -> str:
    lines = [
        f"algebra: {info.source}",
        f"dim: {info.dim}",
        f"basis: {', '.join(info.basis)}",
        f"local: {yes_no(info.local)}",
        f"summands: {len(info.summands)}",
    ]
    for i, s in enumerate(info.summands, start=1):
        fp = s.fingerprint
        lines.append(
            f"  A{i}: dim {s.dim}, hilbert ({', '.join(map(str, fp.hilbert))}), socle {fp.socle_dim}, embedding dim {fp.embedding_dim}, chain {yes_no(s.chain)}"
        )
    lines.append(f"orbit count: {'infinite' if info.orbit_count is None else info.orbit_count}")
    lines.append(f"square-zero radical: {yes_no(info.square_zero_radical)}")
    for i, form in enumerate(info.unit_hyperplanes, start=1):
        lines.append(f"unit hyperplane {i}: ({', '.join(form)})")
    return "\n".join(lines)


@algebra_app.command("info")
def algebra_info(
    source: str = typer.Argument(..., help="A presentation such as 'K[x1]/(x1^3)', a table index, or an Algebra JSON file"),
) -> None:
    """Decompose an algebra into local summands and report its invariants.

    Examples:
        pvalg algebra info "K[x1]/(x1^3)"

        pvalg algebra info 20 --format json

    """
    from pvalg.algebras import fingerprint, is_chain, is_square_zero_radical, local_decomposition, orbit_count, unit_hyperplanes
    from pvalg.core.rationals import format_rational
    from pvalg.models import AlgebraInfo, FingerprintModel, SummaryModel

    cfg = config()
    with input_errors("algebra"):
        label, a = load_algebra(source)
        dec = local_decomposition(a, cfg)
        summaries = []
        for summand in dec.summands:
            fp = fingerprint(summand)
            summaries.append(SummaryModel(dim=summand.dim, basis=list(summand.basis_labels), chain=is_chain(summand), fingerprint=FingerprintModel(**fp.to_dict())))
        info = AlgebraInfo(
            source=label,
            dim=a.dim,
            basis=list(a.basis_labels),
            local=dec.rank == 1,
            summands=summaries,
            orbit_count=orbit_count(a, cfg),
            square_zero_radical=is_square_zero_radical(a, cfg),
            unit_hyperplanes=[[format_rational(x) for x in form] for form in unit_hyperplanes(a, dec)],
        )
    emit_report(info, _info_text)
