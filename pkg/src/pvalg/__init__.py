"""pvalg: exact computations with finite-dimensional commutative algebras.

Presentations ``K[x]/I`` are turned into structure constants through
Gröbner bases; from there pvalg decomposes algebras into local summands,
computes isomorphism invariants, writes down the prehomogeneous module
``G(A)`` acting on ``A``, and runs the reverse construction from a
commutative matrix group back to an algebra.

The public surface is small and resolved lazily, so ``import pvalg`` does
not pull in sympy, polars or pydantic until something needs them.
"""

import importlib
from typing import Any

from ._version import __version__

__all__ = [
    "__version__",
    "actions",
    "algebras",
    "core",
    "groebner",
    "hassett",
    "polyring",
    "prehom",
    "presentations",
    "FiniteAlgebra",
    "Polynomial",
    "Presentation",
    "RunConfig",
    "algebra",
    "table_algebra",
]


def __getattr__(name: str):
    """Lazy import and attribute resolution for top-level names.

    Implements PEP 562: import submodules or attributes on demand.
    """
    mapping = {
        # subpackages and modules
        "actions": "pvalg.actions",
        "algebras": "pvalg.algebras",
        "core": "pvalg.core",
        "groebner": "pvalg.groebner",
        "hassett": "pvalg.hassett",
        "polyring": "pvalg.polyring",
        "prehom": "pvalg.prehom",
        "presentations": "pvalg.presentations",
        # common classes placed in submodules (module:attr)
        "FiniteAlgebra": "pvalg.algebras.finite:FiniteAlgebra",
        "Polynomial": "pvalg.polyring:Polynomial",
        "Presentation": "pvalg.presentations.parser:Presentation",
        "RunConfig": "pvalg.core.config:RunConfig",
    }
    if name in mapping:
        target = mapping[name]
        if ":" in target:
            module_name, attr = target.split(":", 1)
            value = getattr(importlib.import_module(module_name), attr)
        else:
            value = importlib.import_module(target)
        globals()[name] = value
        return value

    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return sorted(list(globals().keys()) + [n for n in __all__ if n not in globals()])


def algebra(text: str) -> Any:
    """Quick helper: parse ``K[...]/(...)`` and return the quotient as a FiniteAlgebra."""
    from .algebras.finite import from_quotient
    from .presentations import parse_presentation

    return from_quotient(parse_presentation(text))


def table_algebra(k: int) -> Any:
    """Quick helper: the algebra of table row ``k`` (1..42)."""
    from .algebras.finite import from_quotient
    from .presentations import table_entry

    return from_quotient(table_entry(k).presentation)
