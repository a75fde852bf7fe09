"""Commutative matrix groups: prehomogeneity, commutants, hulls and reconstruction.

A group is given infinitesimally by a :class:`MatrixGroupInput`, a list of
commuting matrices spanning its Lie algebra. Because the groups are
connected, the group and its Lie algebra have the same commutant, so all
checks reduce to exact linear algebra.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from .algebras.finite import FiniteAlgebra, require_axioms
from .core import linalg
from .core.config import DEFAULT_CONFIG, RunConfig
from .core.errors import DimensionMismatchError, NonCommutativeCommutantError, NotCyclicError
from .core.linalg import Matrix, Vector
from .core.rationals import format_rational
from .models import MatrixGroupModel


@dataclass(frozen=True)
class MatrixGroupInput:
    """Lie algebra basis of a commutative group acting on ``K^n``, plus an optional base point."""

    n: int
    lie_basis: Tuple[Matrix, ...]
    base_point: Optional[Vector] = None

    def __post_init__(self):
        """Coerce entries to fractions and check every matrix is ``n x n``."""
        lie = tuple(linalg.matrix(m) for m in self.lie_basis)
        for m in lie:
            if linalg.shape(m) != (self.n, self.n):
                raise DimensionMismatchError(f"lie basis matrix of shape {linalg.shape(m)}, expected {self.n}x{self.n}")
        object.__setattr__(self, "lie_basis", lie)
        if self.base_point is not None:
            point = linalg.vector(self.base_point)
            if len(point) != self.n:
                raise DimensionMismatchError(f"base point has {len(point)} coordinates, expected {self.n}")
            object.__setattr__(self, "base_point", point)

    def with_point(self, v: Sequence) -> "MatrixGroupInput":
        """Same Lie algebra at another base point."""
        return MatrixGroupInput(self.n, self.lie_basis, linalg.vector(v))


def _point(inp: MatrixGroupInput, v: Optional[Sequence]) -> Vector:
    if v is None:
        v = inp.base_point
    if v is None:
        raise DimensionMismatchError("no point given and the input has no base point")
    point = linalg.vector(v)
    if len(point) != inp.n:
        raise DimensionMismatchError(f"point has {len(point)} coordinates, module has dimension {inp.n}")
    return point


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def check_commutative(inp: MatrixGroupInput) -> bool:
    """True iff every pair of lie basis matrices commutes."""
    basis = inp.lie_basis
    return all(linalg.commutator_is_zero(basis[i], basis[j]) for i in range(len(basis)) for j in range(i + 1, len(basis)))


def is_faithful(inp: MatrixGroupInput) -> bool:
    """True iff the lie basis is linearly independent."""
    return linalg.span_rank([linalg.flatten(m) for m in inp.lie_basis]) == len(inp.lie_basis)


def infinitesimal_orbit_rank(inp: MatrixGroupInput, v: Optional[Sequence] = None) -> int:
    """Dimension of ``span{X v}``, the tangent space of the orbit through ``v``."""
    point = _point(inp, v)
    return linalg.span_rank([linalg.matvec(m, point) for m in inp.lie_basis])


def is_prehomogeneous_at(inp: MatrixGroupInput, v: Optional[Sequence] = None) -> bool:
    """True when the orbit of ``v`` is open and the group has dimension ``n``."""
    return len(inp.lie_basis) == inp.n and infinitesimal_orbit_rank(inp, v) == inp.n


@dataclass(frozen=True)
class OrbitProbe:
    """Best point found by :func:`find_open_orbit_point`."""

    point: Vector
    rank: int
    attempts: int
    open: bool


def find_open_orbit_point(inp: MatrixGroupInput, config: RunConfig = DEFAULT_CONFIG) -> OrbitProbe:
    """Search seeded random integer points for one with a full-rank orbit."""
    rng = config.rng()
    best: Optional[Tuple[int, Vector]] = None
    attempts = 0
    for attempts in range(1, config.retries + 1):
        point = tuple(Fraction(int(x)) for x in rng.integers(-config.point_bound, config.point_bound + 1, size=inp.n))
        rank = infinitesimal_orbit_rank(inp, point)
        if best is None or rank > best[0]:
            best = (rank, point)
        if rank == inp.n:
            break
        logger.debug(f"orbit attempt {attempts}: rank {rank} < {inp.n}")
    rank, point = best
    if rank < inp.n:
        logger.warning(f"no open orbit found at tested points (best rank {rank} of {inp.n} after {attempts} attempts)")
    return OrbitProbe(point, rank, attempts, rank == inp.n)


def is_diagonally_normalized(inp: MatrixGroupInput) -> bool:
    """True iff the span of the lie basis is stable under conjugation by invertible diagonal matrices.

    Equivalently the span contains the diagonal part and every off-diagonal
    matrix-unit component of each of its elements.
    """
    n = inp.n
    span = [linalg.flatten(m) for m in inp.lie_basis]
    for m in inp.lie_basis:
        diagonal = tuple(m[i][j] if i == j else Fraction(0) for i in range(n) for j in range(n))
        if not linalg.in_span(span, diagonal):
            return False
        for i in range(n):
            for j in range(n):
                if i != j and m[i][j]:
                    if not linalg.in_span(span, linalg.unit_vector(n * n, i * n + j)):
                        return False
    return True


# ---------------------------------------------------------------------------
# Commutant and hull
# ---------------------------------------------------------------------------


def commutant(inp: MatrixGroupInput) -> List[Matrix]:
    """Basis of ``{X : XM = MX for every M}``; unknown ``X[i][j]`` sits at ``i*n + j``."""
    n = inp.n
    rows = []
    for m in inp.lie_basis:
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[i * n + k] += m[k][j]  # (XM)[i][j]
                    row[k * n + j] -= m[i][k]  # (MX)[i][j]
                if any(row):
                    rows.append(tuple(row))
    if not rows:
        return [linalg.unflatten(linalg.unit_vector(n * n, k), n) for k in range(n * n)]
    return [linalg.unflatten(v, n) for v in linalg.nullspace(tuple(rows))]


def associative_hull(inp: MatrixGroupInput) -> List[Matrix]:
    """Basis of the smallest unital matrix algebra containing the lie basis."""
    n = inp.n
    basis = [linalg.unflatten(v, n) for v in linalg.independent_subset([linalg.flatten(m) for m in (linalg.identity(n),) + inp.lie_basis])]
    while True:
        products = [linalg.matmul(x, y) for x in basis for y in basis]
        grown = linalg.independent_subset([linalg.flatten(m) for m in basis + products])
        if len(grown) == len(basis):
            return basis
        basis = [linalg.unflatten(v, n) for v in grown]


def is_cyclic(inp: MatrixGroupInput, v: Optional[Sequence] = None) -> bool:
    """True iff ``{X v : X in hull}`` spans ``K^n``."""
    point = _point(inp, v)
    return linalg.span_rank([linalg.matvec(x, point) for x in associative_hull(inp)]) == inp.n


# ---------------------------------------------------------------------------
# Reconstruction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReconstructedAlgebra:
    """``V`` made into an algebra: ``u * w = X_u X_w v``.

    ``operators[i]`` is ``X_{e_i}``, the commutant element sending ``v`` to ``e_i``.
    """

    algebra: FiniteAlgebra
    operators: Tuple[Matrix, ...]
    witness: Vector


@dataclass(frozen=True)
class CyclicEmbedding:
    """The hull ``H`` identified with ``V``; ``lie_images[k]`` is ``M_k v`` in that algebra."""

    algebra: FiniteAlgebra
    lie_images: Tuple[Vector, ...]
    hull_dim: int


def _is_commutative(mats: Sequence[Matrix]) -> bool:
    return all(linalg.commutator_is_zero(mats[i], mats[j]) for i in range(len(mats)) for j in range(i + 1, len(mats)))


def _algebra_on_module(ops: Sequence[Matrix], v: Vector, n: int, labels: Optional[Sequence[str]]) -> Tuple[FiniteAlgebra, Tuple[Matrix, ...]]:
    evaluation = linalg.columns_to_matrix([linalg.matvec(x, v) for x in ops])
    det = linalg.determinant(evaluation)
    if det == 0:
        raise NotCyclicError(f"the point {[str(c) for c in v]} is not cyclic: evaluation map is singular", determinant=det)
    inverse = linalg.inverse(evaluation)
    # X_{e_i} = sum_k inverse[k][i] * ops[k]
    operators = tuple(linalg.linear_combination([inverse[k][i] for k in range(n)], list(ops)) for i in range(n))
    structure = tuple(tuple(linalg.column(operators[i], j) for j in range(n)) for i in range(n))
    algebra = FiniteAlgebra(n, tuple(labels) if labels is not None else tuple(f"v{i + 1}" for i in range(n)), structure, v)
    require_axioms(algebra)
    return algebra, operators


def reconstruct_algebra(
    inp: MatrixGroupInput,
    v: Optional[Sequence] = None,
    labels: Optional[Sequence[str]] = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> ReconstructedAlgebra:
    """Recover the algebra structure on ``V`` from the commutant of ``Lie(G)``.

    ``v`` defaults to the input's base point, then to a seeded generic point.

    Raises:
        DimensionMismatchError: the commutant dimension differs from ``n``.
        NonCommutativeCommutantError: the commutant is not commutative.
        NotCyclicError: ``X -> X v`` is not a bijection; carries the determinant.

    """
    n = inp.n
    basis = commutant(inp)
    if len(basis) != n:
        raise DimensionMismatchError(f"commutant has dimension {len(basis)}, module has dimension {n}")
    if not _is_commutative(basis):
        raise NonCommutativeCommutantError("the commutant of the lie algebra is not commutative")
    if v is None and inp.base_point is None:
        v = find_open_orbit_point(inp, config).point
    point = _point(inp, v)
    algebra, operators = _algebra_on_module(basis, point, n, labels)
    logger.debug(f"reconstructed a {n}-dimensional algebra at {[str(c) for c in point]}")
    return ReconstructedAlgebra(algebra, operators, point)


def embed_cyclic(inp: MatrixGroupInput, v: Optional[Sequence] = None) -> CyclicEmbedding:
    """Identify the associative hull with ``V`` through ``X -> X v``.

    Raises:
        NonCommutativeCommutantError: the hull is not commutative.
        NotCyclicError: ``v`` is not a cyclic vector for the hull.

    """
    point = _point(inp, v)
    hull = associative_hull(inp)
    if not _is_commutative(hull):
        raise NonCommutativeCommutantError("the associative hull is not commutative")
    if len(hull) != inp.n or linalg.span_rank([linalg.matvec(x, point) for x in hull]) < inp.n:
        raise NotCyclicError("the point is not cyclic for the associative hull", determinant=0)
    algebra, _ = _algebra_on_module(hull, point, inp.n, None)
    images = tuple(linalg.matvec(m, point) for m in inp.lie_basis)
    return CyclicEmbedding(algebra, images, len(hull))


# ---------------------------------------------------------------------------
# Built-in groups
# ---------------------------------------------------------------------------


def _matrix_unit(n: int, i: int, j: int) -> Matrix:
    return tuple(tuple(Fraction(1) if (r, c) == (i, j) else Fraction(0) for c in range(n)) for r in range(n))


def polex_group(n: int) -> MatrixGroupInput:
    """``{[[lambda E, A], [0, lambda E]]}`` on ``K^(2n)``: faithful, ``n^2 + 1`` parameters."""
    if n < 1:
        raise DimensionMismatchError(f"polex needs n >= 1 (got {n})")
    lie = [linalg.identity(2 * n)] + [_matrix_unit(2 * n, i, n + j) for i in range(n) for j in range(n)]
    return MatrixGroupInput(2 * n, tuple(lie))


def translations_group(n: int) -> MatrixGroupInput:
    """Translations of ``K^n`` as ``[[E, alpha], [0, 1]]`` on ``K^(n+1)``."""
    if n < 1:
        raise DimensionMismatchError(f"translations need n >= 1 (got {n})")
    lie = [_matrix_unit(n + 1, i, n) for i in range(n)]
    return MatrixGroupInput(n + 1, tuple(lie), linalg.unit_vector(n + 1, n))


def regular_rep(a: FiniteAlgebra) -> MatrixGroupInput:
    """``{L_{b_i}}`` with the unit as base point."""
    return MatrixGroupInput(a.dim, a.operators, a.unit)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def group_from_model(model: MatrixGroupModel) -> MatrixGroupInput:
    """Build the input from its JSON schema."""
    point = linalg.vector(model.base_point) if model.base_point is not None else None
    return MatrixGroupInput(model.n, tuple(linalg.matrix(m) for m in model.lie_basis), point)


def group_to_model(inp: MatrixGroupInput) -> MatrixGroupModel:
    """Serialize with rationals as strings."""
    return MatrixGroupModel(
        n=inp.n,
        lie_basis=[[[format_rational(x) for x in row] for row in m] for m in inp.lie_basis],
        base_point=None if inp.base_point is None else [format_rational(x) for x in inp.base_point],
    )
