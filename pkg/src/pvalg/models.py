"""JSON schemas for algebras, representations, matrix groups, actions and CLI reports.

Rationals travel as strings ``"p"`` or ``"p/q"``; polynomials as their
starred text form.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, field_validator, model_validator

from .core.rationals import parse_rational


def _check_rational(value: str) -> str:
    parse_rational(value)
    return value.strip()


class AlgebraModel(BaseModel):
    """``{"dim", "basis", "unit", "structure"}`` with ``structure[i][j][k] = c_ij^k``."""

    dim: int
    basis: List[str]
    unit: List[str]
    structure: List[List[List[str]]]

    @field_validator("unit")
    @classmethod
    def _unit_rationals(cls, v: List[str]) -> List[str]:
        return [_check_rational(x) for x in v]

    @field_validator("structure")
    @classmethod
    def _structure_rationals(cls, v: List[List[List[str]]]) -> List[List[List[str]]]:
        return [[[_check_rational(x) for x in vec] for vec in row] for row in v]

    @model_validator(mode="after")
    def _shapes(self) -> "AlgebraModel":
        n = self.dim
        if len(self.basis) != n or len(self.unit) != n:
            raise ValueError(f"basis and unit must have {n} entries")
        if len(self.structure) != n or any(len(row) != n or any(len(vec) != n for vec in row) for row in self.structure):
            raise ValueError(f"structure must be {n}x{n}x{n}")
        return self


class RepModel(BaseModel):
    """A parameterized matrix representation ``rho`` of ``G(A)`` on ``A``."""

    n: int
    torus_params: List[str]
    additive_params: List[str]
    entries: List[List[str]]  # polynomial text over torus + additive params
    layout: List[List[int]]  # row indices per local summand
    basis: Optional[List[str]] = None
    unit: Optional[List[str]] = None

    @model_validator(mode="after")
    def _shapes(self) -> "RepModel":
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"entries must be {self.n}x{self.n}")
        if len(self.layout) != len(self.torus_params):
            raise ValueError("layout needs one block per torus parameter")
        if sorted(i for block in self.layout for i in block) != list(range(self.n)):
            raise ValueError("layout blocks must partition 0..n-1")
        if self.unit is not None:
            self.unit = [_check_rational(x) for x in self.unit]
        return self


class MatrixGroupModel(BaseModel):
    """Commuting matrices spanning ``Lie(G)`` and an optional base point."""

    n: int
    lie_basis: List[List[List[str]]]
    base_point: Optional[List[str]] = None

    @field_validator("lie_basis")
    @classmethod
    def _lie_rationals(cls, v: List[List[List[str]]]) -> List[List[List[str]]]:
        return [[[_check_rational(x) for x in row] for row in m] for m in v]

    @field_validator("base_point")
    @classmethod
    def _point_rationals(cls, v: Optional[List[str]]) -> Optional[List[str]]:
        return None if v is None else [_check_rational(x) for x in v]


class ActionModel(BaseModel):
    """A polynomial action of ``G_m^r x G_a^s`` on affine ``n``-space."""

    r: int
    s: int
    n: int
    components: List[str]  # polynomials in l1..lr, a1..as, x1..xn
    name: Optional[str] = None

    @model_validator(mode="after")
    def _shapes(self) -> "ActionModel":
        if min(self.r, self.s, self.n) < 0 or len(self.components) != self.n:
            raise ValueError("components must list one polynomial per space coordinate")
        return self


# ---------------------------------------------------------------------------
# CLI reports
# ---------------------------------------------------------------------------


class TableRow(BaseModel):
    """One row of ``pvalg table list``."""

    index: int
    dim: int
    presentation: str
    note: str = ""


class FingerprintModel(BaseModel):
    """Invariants of one algebra."""

    dim: int
    hilbert: List[int]
    socle_dim: int
    ann_filtration: List[int]
    embedding_dim: int


class TableEntryReport(BaseModel):
    """``pvalg table show``: the entry plus its invariants and flags."""

    index: int
    presentation: str
    declared_dim: int
    dim: int
    hilbert: List[int]
    socle_dim: int
    chain: bool
    square_zero_radical: bool
    note: str = ""


class SummaryModel(BaseModel):
    """Dimension, basis and local structure flags."""

    dim: int
    basis: List[str]
    chain: bool
    fingerprint: FingerprintModel


class AlgebraInfo(BaseModel):
    """``pvalg algebra info``."""

    source: str
    dim: int
    basis: List[str]
    local: bool
    summands: List[SummaryModel]
    orbit_count: Optional[int]  # None: infinitely many orbits
    square_zero_radical: bool
    unit_hyperplanes: List[List[str]]


class SeparationReport(BaseModel):
    """``pvalg compare``."""

    left: str
    right: str
    result: str  # "separated" | "inconclusive"
    invariant: Optional[str] = None
    left_value: Optional[str] = None
    right_value: Optional[str] = None
    checked: List[str] = []


class SweepRow(BaseModel):
    """One pair of the table sweep."""

    a: int
    b: int
    dim_a: int
    dim_b: int
    result: str
    invariant: Optional[str] = None
    left: Optional[str] = None
    right: Optional[str] = None


class RepCheckReport(BaseModel):
    """``pvalg rep verify``."""

    source: str
    n: int
    homomorphism: bool
    determinant: str
    expected_determinant: str
    identity_ok: bool


class ReconstructionReport(BaseModel):
    """``pvalg reconstruct``."""

    status: str  # "reconstructed" | "not_cyclic" | "noncommutative_commutant" | "dimension_mismatch"
    message: str = ""
    witness: Optional[List[str]] = None
    commutant_dim: Optional[int] = None
    algebra: Optional[AlgebraModel] = None


class ActionReportModel(BaseModel):
    """``pvalg action check``."""

    name: str
    params: Dict[str, int]
    axioms_ok: bool
    linear: bool
    has_fixed_point: Optional[bool]  # None: undecided
    orbit_rank_at_witness: int
    parameter_count: int
    n: int
    witness: List[str]
