"""Helpers shared by the command modules: config access, input loading, rendering and exit codes.

Exit codes: 0 for a positive result, 1 for a valid negative result, 2 for
an input error.
"""

import json
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Iterator, List, NoReturn, Optional, Tuple

import typer
from loguru import logger
from pydantic import BaseModel, ValidationError
from rich.markup import escape

from pvalg.core.config import RunConfig
from pvalg.core.errors import ParameterError, PvalgError
from pvalg.core.rationals import parse_rational

from ._app import console, state

EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def config() -> RunConfig:
    """Run configuration of the current invocation."""
    return state["config"]


def fail(stage: str, message: str) -> NoReturn:
    """Print the error line and exit with code 2."""
    console.print(f"[red]Error: {escape(stage)}: {escape(message)}[/red]")
    raise typer.Exit(code=EXIT_ERROR)


@contextmanager
def input_errors(default_stage: str = "input") -> Iterator[None]:
    """Turn library and file errors into ``Error: <stage>: <message>`` and exit 2."""
    try:
        yield
    except PvalgError as exc:
        fail(exc.stage, str(exc))
    except ValidationError as exc:
        fail("schema", str(exc).splitlines()[0] if str(exc) else "invalid document")
    except (OSError, json.JSONDecodeError) as exc:
        fail(default_stage, str(exc))
    except ValueError as exc:
        fail(default_stage, str(exc))


def emit(text: str) -> None:
    """Write ``text`` to ``--output`` or stdout, without markup processing."""
    out = config().output
    if out is None:
        typer.echo(text)
        return
    Path(out).write_text(text + "\n", encoding="utf-8")
    logger.info(f"wrote {out}")
    console.print(f"Wrote [bold]{escape(str(out))}[/bold]")


def emit_report(model: BaseModel, text: Callable[[BaseModel], str], latex: Optional[Callable[[BaseModel], str]] = None) -> None:
    """Render ``model`` per ``--format``; formats without a renderer fall back to text."""
    fmt = config().format
    if fmt == "json":
        emit(model.model_dump_json(indent=2))
    elif fmt == "latex" and latex is not None:
        emit(latex(model))
    else:
        emit(text(model))


def emit_rows(models: List[BaseModel], text: Callable[[List[BaseModel]], str]) -> None:
    """Render a list of models as a JSON array or as text."""
    if config().format == "json":
        emit(json.dumps([m.model_dump(mode="json") for m in models], indent=2))
    else:
        emit(text(models))


def yes_no(flag: Optional[bool]) -> str:
    """``yes``, ``no`` or ``unknown``."""
    return "unknown" if flag is None else ("yes" if flag else "no")


def parse_assignments(text: Optional[str]) -> Dict[str, str]:
    """``"k=v,k2=v2"`` to a dict of stripped strings."""
    result: Dict[str, str] = {}
    if not text:
        return result
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key.strip() or not value.strip():
            raise ParameterError(f"expected name=value, got '{item.strip()}'")
        result[key.strip()] = value.strip()
    return result


def parse_vector(text: str) -> Tuple[Fraction, ...]:
    """Comma-separated rationals."""
    try:
        return tuple(parse_rational(x.strip()) for x in text.split(","))
    except ValueError as exc:
        raise ParameterError(f"cannot read vector '{text}': {exc}") from exc


def load_algebra(source: str):
    """Resolve SOURCE: a table index, an Algebra JSON file, or a presentation.

    Returns ``(label, algebra)``.
    """
    from pvalg.algebras.finite import algebra_from_model, from_quotient
    from pvalg.models import AlgebraModel
    from pvalg.presentations import parse_presentation, table_entry

    text = source.strip()
    if text.isdigit():
        entry = table_entry(int(text))
        return f"table entry {entry.index}: {entry.text}", from_quotient(entry.presentation)
    path = Path(text)
    if text.endswith(".json") or path.is_file():
        model = AlgebraModel.model_validate_json(path.read_text(encoding="utf-8"))
        return str(path), algebra_from_model(model)
    presentation = parse_presentation(text)
    logger.info(f"analysing {presentation}")
    return str(presentation), from_quotient(presentation)
