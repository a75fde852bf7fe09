"""Shared plumbing: errors, run configuration, rationals and exact linear algebra."""

from .config import DEFAULT_CONFIG, RunConfig
from .errors import (
    AxiomViolationError,
    DimensionMismatchError,
    InfiniteDimensionalError,
    InvalidBasisError,
    NonCommutativeCommutantError,
    NonSplitResidueError,
    NotCyclicError,
    NotLocalError,
    NotNilpotentError,
    NotUnipotentError,
    ParameterError,
    PresentationError,
    PvalgError,
    VariableMismatchError,
)
from .rationals import as_fraction, format_rational, parse_rational

__all__ = [
    "DEFAULT_CONFIG",
    "RunConfig",
    "AxiomViolationError",
    "DimensionMismatchError",
    "InfiniteDimensionalError",
    "InvalidBasisError",
    "NonCommutativeCommutantError",
    "NonSplitResidueError",
    "NotCyclicError",
    "NotLocalError",
    "NotNilpotentError",
    "NotUnipotentError",
    "ParameterError",
    "PresentationError",
    "PvalgError",
    "VariableMismatchError",
    "as_fraction",
    "format_rational",
    "parse_rational",
]
