"""Typer app creation and shared state for the pvalg CLI.

Imports of command modules in ``__init__.py`` trigger the
``@app.command()`` / ``@<sub>.command()`` decorators that register
each CLI entry point.
"""

import sys
from pathlib import Path
from typing import Optional

import typer
from loguru import logger
from rich.console import Console
from rich.markup import escape

from pvalg._version import __version__
from pvalg.core.config import DEFAULT_CONFIG, FORMATS, RunConfig

app = typer.Typer(
    name="pvalg",
    help="Commutative algebras, their unit groups and prehomogeneous modules",
    rich_markup_mode="rich",
    add_completion=False,
)

console = Console()

# Set by the root callback, read by every command.
state = {"config": DEFAULT_CONFIG}


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        typer.echo(f"pvalg {__version__}")
        raise typer.Exit()


@app.callback()
def main_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr at DEBUG level"),
    seed: int = typer.Option(0, "--seed", help="Seed for every randomized search"),
    fmt: str = typer.Option("text", "--format", "-f", help=f"Output format: {', '.join(FORMATS)}"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the result to this file instead of stdout"),
    version: bool = typer.Option(False, "--version", help="Show version information", callback=version_callback),
) -> None:
    """Pvalg - exact computations with finite-dimensional commutative algebras and their modules."""
    if verbose:
        logger.enable("pvalg")
        logger.remove()
        logger.add(sys.stderr, level="DEBUG")
    else:
        logger.disable("pvalg")
    try:
        state["config"] = RunConfig(seed=seed, format=fmt, output=output)
    except ValueError as exc:
        console.print(f"[red]Error: config: {escape(str(exc))}[/red]")
        raise typer.Exit(code=2) from exc


table_app = typer.Typer(name="table", help="Browse the table of local algebras of dimension up to 6", rich_markup_mode="rich")
app.add_typer(table_app)

algebra_app = typer.Typer(name="algebra", help="Analyse a finite-dimensional commutative algebra", rich_markup_mode="rich")
app.add_typer(algebra_app)

rep_app = typer.Typer(name="rep", help="The G(A)-module A as a parameterized matrix", rich_markup_mode="rich")
app.add_typer(rep_app)

action_app = typer.Typer(name="action", help="Polynomial actions of tori times vector groups on affine space", rich_markup_mode="rich")
app.add_typer(action_app)
