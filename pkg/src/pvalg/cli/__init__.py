"""Pvalg CLI: the :command:`pvalg` entry point."""

from . import (
    action,  # noqa: F401: registers @action_app.command() decorators
    algebra,  # noqa: F401: registers @algebra_app.command() decorators
    compare,  # noqa: F401: registers @app.command() decorators
    reconstruct,  # noqa: F401: registers @app.command() decorators
    rep,  # noqa: F401: registers @rep_app.command() decorators
    table,  # noqa: F401: registers @table_app.command() decorators
)
from ._app import app


def cli() -> None:
    """Entry point for the pvalg CLI (``pyproject.toml`` → ``pvalg.cli:cli``)."""
    app()


__all__ = ["app", "cli"]
