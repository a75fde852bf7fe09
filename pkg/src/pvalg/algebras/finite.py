"""Finite-dimensional commutative algebras given by structure constants.

A :class:`FiniteAlgebra` stores ``structure[i][j]``, the coordinate vector of
``b_i * b_j``, and the coordinates of the unit. Elements are plain coordinate
tuples. Arithmetic is written over any coefficient ring that accepts rational
scalars, so elements may carry :class:`~pvalg.polyring.Polynomial` coordinates
when a computation runs over symbolic parameters.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from ..core import linalg
from ..core.errors import AxiomViolationError, DimensionMismatchError, InvalidBasisError, PvalgError
from ..core.linalg import Matrix, Vector
from ..core.rationals import as_fraction, format_rational, parse_rational
from ..groebner import GroebnerBasis, QuotientBasis, buchberger, quotient_coordinates, standard_monomials
from ..models import AlgebraModel
from ..polyring import DEGREVLEX, Polynomial, TermOrder, mono_mul
from ..presentations import Presentation

Structure = Tuple[Tuple[Vector, ...], ...]


def _zero_like(values: Sequence):
    for v in values:
        if isinstance(v, Polynomial):
            return Polynomial.zero(v.variables)
    return Fraction(0)


@dataclass(frozen=True)
class FiniteAlgebra:
    """A commutative associative unital algebra over the rationals.

    Attributes:
        dim: Dimension ``n``.
        basis_labels: One label per basis vector.
        structure: ``structure[i][j][k]`` is the ``b_k`` coefficient of ``b_i * b_j``.
        unit: Coordinates of the identity element.
        presentation: Source presentation, when built by :func:`from_quotient`.
        groebner: Gröbner basis of the presentation ideal.
        quotient_basis: Standard monomials matching ``basis_labels``.

    """

    dim: int
    basis_labels: Tuple[str, ...]
    structure: Structure
    unit: Vector
    presentation: Optional[Presentation] = field(default=None, compare=False, repr=False)
    groebner: Optional[GroebnerBasis] = field(default=None, compare=False, repr=False)
    quotient_basis: Optional[QuotientBasis] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        """Coerce entries to fractions and check every shape against ``dim``."""
        n = self.dim
        if n < 1:
            raise DimensionMismatchError(f"algebra dimension must be at least 1 (got {n})")
        labels = tuple(str(x) for x in self.basis_labels)
        if len(labels) != n:
            raise DimensionMismatchError(f"{len(labels)} basis labels for dimension {n}")
        if len(self.structure) != n or any(len(row) != n for row in self.structure):
            raise DimensionMismatchError(f"structure tensor is not {n}x{n}x{n}")
        structure = tuple(tuple(linalg.vector(v) for v in row) for row in self.structure)
        if any(len(v) != n for row in structure for v in row):
            raise DimensionMismatchError(f"structure tensor is not {n}x{n}x{n}")
        unit = linalg.vector(self.unit)
        if len(unit) != n:
            raise DimensionMismatchError(f"unit has {len(unit)} coordinates, expected {n}")
        object.__setattr__(self, "basis_labels", labels)
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "unit", unit)

    # -- elements -----------------------------------------------------------

    def zero(self) -> Vector:
        """Zero element."""
        return tuple(Fraction(0) for _ in range(self.dim))

    def one(self) -> Vector:
        """The unit element."""
        return self.unit

    def basis_vector(self, i: int) -> Vector:
        """Coordinates of the ``i``-th basis element."""
        return linalg.unit_vector(self.dim, i)

    def element(self, coefficients: Mapping[str, object]) -> Vector:
        """Build an element from ``{label: coefficient}``."""
        coords = [Fraction(0)] * self.dim
        for label, value in coefficients.items():
            try:
                coords[self.basis_labels.index(label)] = as_fraction(value)
            except ValueError:
                raise PvalgError(f"unknown basis label '{label}' (labels: {', '.join(self.basis_labels)})") from None
        return tuple(coords)

    def check_element(self, a: Sequence) -> None:
        """Raise unless ``a`` has one coordinate per basis element."""
        if len(a) != self.dim:
            raise DimensionMismatchError(f"element has {len(a)} coordinates, algebra has dimension {self.dim}")

    # -- arithmetic ---------------------------------------------------------

    def multiply(self, a: Sequence, b: Sequence) -> tuple:
        """Product of two elements; coordinates may be rationals or polynomials."""
        self.check_element(a)
        self.check_element(b)
        zero = _zero_like(tuple(a) + tuple(b))
        acc = [zero] * self.dim
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                coeff = ai * bj
                for k, c in enumerate(self.structure[i][j]):
                    if c:
                        acc[k] = acc[k] + coeff * c
        return tuple(acc)

    def power(self, a: Sequence, k: int) -> tuple:
        """``a^k`` for ``k >= 0``."""
        if k < 0:
            raise PvalgError("negative powers are not defined; use try_inverse")
        zero = _zero_like(a)
        result = tuple(zero + u for u in self.unit)
        for _ in range(k):
            result = self.multiply(result, a)
        return result

    def mult_operator(self, a: Sequence) -> Tuple[tuple, ...]:
        """Matrix of ``x -> a*x``: column ``j`` holds the coordinates of ``a * b_j``."""
        self.check_element(a)
        n = self.dim
        zero = _zero_like(a)
        rows = [[zero] * n for _ in range(n)]
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n):
                for k, c in enumerate(self.structure[i][j]):
                    if c:
                        rows[k][j] = rows[k][j] + ai * c
        return tuple(tuple(row) for row in rows)

    @cached_property
    def operators(self) -> Tuple[Matrix, ...]:
        """``L_{b_i}`` for every basis vector."""
        return tuple(self.mult_operator(self.basis_vector(i)) for i in range(self.dim))

    @cached_property
    def trace_vector(self) -> Vector:
        """``t[k] = trace(L_{b_k})``; ``trace(L_a)`` is ``dot(t, a)``."""
        return tuple(linalg.trace(op) for op in self.operators)

    def __str__(self):
        """Short summary with the basis labels."""
        return f"FiniteAlgebra(dim={self.dim}, basis=({', '.join(self.basis_labels)}))"


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def from_quotient(p: Presentation, order: TermOrder = DEGREVLEX) -> FiniteAlgebra:
    """Build ``K[x]/I`` in its standard-monomial basis.

    Raises:
        InfiniteDimensionalError: the quotient is not finite-dimensional.
        PvalgError: the ideal is the whole ring.

    """
    gb = buchberger(p.generators, order, p.variables)
    qb = standard_monomials(gb)
    n = len(qb)
    if n == 0:
        raise PvalgError("the ideal contains 1; the quotient is the zero ring")
    structure = tuple(
        tuple(quotient_coordinates(Polynomial.monomial(p.variables, mono_mul(mi, mj)), gb, qb) for mj in qb.monomials) for mi in qb.monomials
    )
    unit = linalg.unit_vector(n, qb.index((0,) * len(p.variables)))
    logger.debug(f"from_quotient: {len(gb)} Gröbner elements, dimension {n}")
    return FiniteAlgebra(n, qb.labels, structure, unit, presentation=p, groebner=gb, quotient_basis=qb)


def from_structure(structure: Sequence, unit: Sequence, labels: Optional[Sequence[str]] = None) -> FiniteAlgebra:
    """Build an algebra from raw structure constants; labels default to ``b1..bn``."""
    n = len(structure)
    return FiniteAlgebra(n, tuple(labels) if labels is not None else tuple(f"b{i + 1}" for i in range(n)), structure, unit)


@dataclass(frozen=True)
class AxiomReport:
    """Pass/fail for each algebra axiom, with the offending basis triples."""

    commutative: bool
    associative: bool
    unit_law: bool
    failures: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        """True when every axiom holds."""
        return self.commutative and self.associative and self.unit_law


def verify_axioms(a: FiniteAlgebra) -> AxiomReport:
    """Check commutativity, associativity and the unit law on basis vectors."""
    n = a.dim
    labels = a.basis_labels
    failures: List[str] = []
    commutative = True
    for i in range(n):
        for j in range(i + 1, n):
            if a.structure[i][j] != a.structure[j][i]:
                commutative = False
                failures.append(f"commutativity: {labels[i]}*{labels[j]} != {labels[j]}*{labels[i]}")
    associative = True
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = a.multiply(a.structure[i][j], a.basis_vector(k))
                right = a.multiply(a.basis_vector(i), a.structure[j][k])
                if left != right:
                    associative = False
                    failures.append(f"associativity: ({labels[i]}*{labels[j]})*{labels[k]} != {labels[i]}*({labels[j]}*{labels[k]})")
    unit_law = True
    for j in range(n):
        if tuple(a.multiply(a.unit, a.basis_vector(j))) != a.basis_vector(j):
            unit_law = False
            failures.append(f"unit law: 1*{labels[j]} != {labels[j]}")
    return AxiomReport(commutative, associative, unit_law, tuple(failures))


def require_axioms(a: FiniteAlgebra) -> None:
    """Raise :class:`AxiomViolationError` naming the first failed axiom."""
    report = verify_axioms(a)
    if not report.ok:
        raise AxiomViolationError(f"not a commutative associative unital algebra: {report.failures[0]}")


def mult_operator(a: FiniteAlgebra, x: Sequence) -> Tuple[tuple, ...]:
    """Matrix of multiplication by ``x``."""
    return a.mult_operator(x)


def try_inverse(a: FiniteAlgebra, x: Sequence) -> Optional[Vector]:
    """Return ``y`` with ``x*y = 1``, or ``None`` when ``L_x`` is singular."""
    op = a.mult_operator(linalg.vector(x))
    if linalg.determinant(op) == 0:
        return None
    return linalg.solve(op, a.unit)


def change_basis(a: FiniteAlgebra, columns: Matrix, labels: Optional[Sequence[str]] = None) -> FiniteAlgebra:
    """Re-express ``a`` in the basis given by the columns of ``columns``.

    Raises:
        InvalidBasisError: the columns are not a basis.

    """
    if linalg.shape(columns) != (a.dim, a.dim):
        raise InvalidBasisError(f"change of basis must be {a.dim}x{a.dim}")
    inverse = linalg.inverse(columns)
    if inverse is None:
        raise InvalidBasisError("change-of-basis matrix is singular")
    basis = [linalg.column(columns, j) for j in range(a.dim)]
    structure = tuple(tuple(linalg.matvec(inverse, a.multiply(u, w)) for w in basis) for u in basis)
    unit = linalg.matvec(inverse, a.unit)
    new_labels = tuple(labels) if labels is not None else tuple(f"b{i + 1}" for i in range(a.dim))
    return FiniteAlgebra(a.dim, new_labels, structure, unit, presentation=a.presentation, groebner=a.groebner)


def permute_basis(a: FiniteAlgebra, perm: Sequence[int]) -> FiniteAlgebra:
    """Reorder the basis: new basis vector ``i`` is old basis vector ``perm[i]``."""
    if sorted(perm) != list(range(a.dim)):
        raise InvalidBasisError(f"{list(perm)} is not a permutation of 0..{a.dim - 1}")
    columns = linalg.columns_to_matrix([a.basis_vector(p) for p in perm])
    return change_basis(a, columns, [a.basis_labels[p] for p in perm])


def direct_sum(parts: Sequence[FiniteAlgebra]) -> FiniteAlgebra:
    """Block direct sum; labels get an ``@A<i>`` suffix when there are several parts."""
    if not parts:
        raise ValueError("direct_sum needs at least one algebra")
    if len(parts) == 1:
        return parts[0]
    n = sum(p.dim for p in parts)
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.dim
    zero = tuple(Fraction(0) for _ in range(n))
    structure = [[zero] * n for _ in range(n)]
    unit = [Fraction(0)] * n
    labels: List[str] = []
    for idx, (part, off) in enumerate(zip(parts, offsets)):
        labels.extend(f"{label}@A{idx + 1}" for label in part.basis_labels)
        for i in range(part.dim):
            unit[off + i] = part.unit[i]
            for j in range(part.dim):
                v = [Fraction(0)] * n
                v[off : off + part.dim] = part.structure[i][j]
                structure[off + i][off + j] = tuple(v)
    return FiniteAlgebra(n, tuple(labels), tuple(tuple(row) for row in structure), tuple(unit))


def algebra_to_model(a: FiniteAlgebra) -> AlgebraModel:
    """Serialize structure constants with rationals as strings."""
    return AlgebraModel(
        dim=a.dim,
        basis=list(a.basis_labels),
        unit=[format_rational(x) for x in a.unit],
        structure=[[[format_rational(x) for x in vec] for vec in row] for row in a.structure],
    )


def algebra_from_model(model: AlgebraModel) -> FiniteAlgebra:
    """Load an Algebra JSON document and check the axioms.

    Raises:
        AxiomViolationError: the structure constants are not commutative, associative and unital.

    """
    structure = [[[parse_rational(x) for x in vec] for vec in row] for row in model.structure]
    a = from_structure(structure, [parse_rational(x) for x in model.unit], model.basis)
    require_axioms(a)
    return a
