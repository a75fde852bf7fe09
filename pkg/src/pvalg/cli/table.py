""":command:`pvalg table`: the table of local algebras of dimension up to 6."""

import typer

from ._app import table_app
from ._common import config, emit_report, emit_rows, input_errors, yes_no


def _list_text(rows) -> str:
    lines = [f"{'#':>3}  {'dim':>3}  presentation"]
    for row in rows:
        suffix = f"  ({row.note})" if row.note else ""
        lines.append(f"{row.index:>3}  {row.dim:>3}  {row.presentation}{suffix}")
    return "\n".join(lines)


@table_app.command("list")
def table_list() -> None:
    """List all 42 entries with their declared dimension."""
    from pvalg.models import TableRow
    from pvalg.presentations import load_table

    rows = [TableRow(index=e.index, dim=e.declared_dim, presentation=e.text, note=e.note) for e in load_table()]
    emit_rows(rows, _list_text)


def _show_text(report) -> str:
    lines = [
        f"entry {report.index}: {report.presentation}",
        f"dim: {report.dim} (declared {report.declared_dim})",
        f"hilbert function: ({', '.join(str(h) for h in report.hilbert)})",
        f"socle dimension: {report.socle_dim}",
        f"chain: {yes_no(report.chain)}",
        f"square-zero radical: {yes_no(report.square_zero_radical)}",
    ]
    if report.note:
        lines.append(f"note: {report.note}")
    return "\n".join(lines)


@table_app.command("show")
def table_show(
    index: int = typer.Argument(..., help="Row number, 1..42"),
) -> None:
    """Show one entry with its dimension, Hilbert function, socle and flags.

    Example:
        pvalg table show 20

    """
    from pvalg.algebras import fingerprint, from_quotient, is_chain, is_square_zero_radical
    from pvalg.models import TableEntryReport
    from pvalg.presentations import table_entry

    with input_errors("table"):
        entry = table_entry(index)
        a = from_quotient(entry.presentation)
        fp = fingerprint(a)
        report = TableEntryReport(
            index=entry.index,
            presentation=entry.text,
            declared_dim=entry.declared_dim,
            dim=a.dim,
            hilbert=list(fp.hilbert),
            socle_dim=fp.socle_dim,
            chain=is_chain(a),
            square_zero_radical=is_square_zero_radical(a, config()),
            note=entry.note,
        )
    emit_report(report, _show_text)
