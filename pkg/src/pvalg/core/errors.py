"""Exception hierarchy for pvalg.

Every error subclasses :class:`PvalgError`, which itself is a ``ValueError``,
so callers that only care about "bad input" can keep catching ``ValueError``.
Negative answers that are still valid results (an inconclusive comparison,
a non-invertible element, an unknown fixed-point status) are returned as
values and never raised.
"""

from typing import Optional


class PvalgError(ValueError):
    """Base class for all pvalg errors."""

    stage = "pvalg"


class VariableMismatchError(PvalgError):
    """Polynomials over different variable sets were combined."""

    stage = "polynomial"


class PresentationError(PvalgError):
    """A presentation string could not be parsed or is not well formed."""

    stage = "parse"

    def __init__(self, message: str, position: Optional[int] = None):
        """Attach the character offset of the failure when known."""
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class InfiniteDimensionalError(PvalgError):
    """The quotient ring is not finite dimensional."""

    stage = "groebner"


class NonSplitResidueError(PvalgError):
    """Residue fields are not all the rationals; splitting needs an extension."""

    stage = "decomposition"


class NotNilpotentError(PvalgError):
    """An element expected to be nilpotent is not."""

    stage = "exp"


class NotUnipotentError(PvalgError):
    """An element expected to be of the form 1 + nilpotent is not."""

    stage = "log"


class InvalidBasisError(PvalgError):
    """A user supplied basis is not a basis of the algebra."""

    stage = "basis"


class AxiomViolationError(PvalgError):
    """Structure constants fail commutativity, associativity or the unit law."""

    stage = "axioms"


class NotLocalError(PvalgError):
    """An operation that needs a local algebra received a non-local one."""

    stage = "locality"


class NotCyclicError(PvalgError):
    """The evaluation map at the base vector is singular."""

    stage = "reconstruct"

    def __init__(self, message: str, determinant=0):
        """Record the determinant of the evaluation matrix (always zero)."""
        self.determinant = determinant
        super().__init__(message)


class NonCommutativeCommutantError(PvalgError):
    """The commutant of the Lie basis is not commutative."""

    stage = "reconstruct"


class DimensionMismatchError(PvalgError):
    """Sizes that have to agree do not."""

    stage = "dimension"


class ParameterError(PvalgError):
    """A parameter assignment or builtin parameter is missing or invalid."""

    stage = "parameters"
