"""Exact linear algebra over the rationals.

Matrices are tuples of row tuples of :class:`~fractions.Fraction`, vectors are
tuples of fractions. Cheap elementwise work happens here directly; anything
that needs elimination (rank, nullspace, determinants, solving) is delegated
to :class:`sympy.Matrix`, which works exactly over the rationals.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy as sp

from .rationals import as_fraction

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Construction and conversion
# ---------------------------------------------------------------------------


def vector(values: Sequence) -> Vector:
    """Coerce a sequence of rationals (ints, fractions, ``"p/q"``) to a vector."""
    return tuple(as_fraction(v) for v in values)


def matrix(rows: Sequence[Sequence]) -> Matrix:
    """Coerce nested sequences to a matrix, checking that rows are rectangular."""
    result = tuple(vector(row) for row in rows)
    if result and any(len(row) != len(result[0]) for row in result):
        raise ValueError("matrix rows have different lengths")
    return result


def identity(n: int) -> Matrix:
    """The ``n x n`` identity matrix."""
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    """A zero matrix."""
    return tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows))


def unit_vector(n: int, index: int) -> Vector:
    """Standard basis vector ``e_index`` of length ``n``."""
    return tuple(ONE if i == index else ZERO for i in range(n))


def shape(m: Matrix) -> Tuple[int, int]:
    """``(rows, cols)``."""
    return (len(m), len(m[0]) if m else 0)


def to_sympy(m: Matrix) -> sp.Matrix:
    """Exact sympy matrix."""
    rows, cols = shape(m)
    return sp.Matrix(rows, cols, [sp.Rational(x.numerator, x.denominator) for row in m for x in row])


def from_sympy(m: sp.Matrix) -> Matrix:
    """Back from sympy to tuples of fractions."""
    return tuple(tuple(as_fraction(m[i, j]) for j in range(m.cols)) for i in range(m.rows))


def columns_to_matrix(columns: Sequence[Vector]) -> Matrix:
    """Stack vectors as the columns of a matrix."""
    if not columns:
        return ()
    return tuple(tuple(col[i] for col in columns) for i in range(len(columns[0])))


def column(m: Matrix, j: int) -> Vector:
    """Column ``j`` as a vector."""
    return tuple(row[j] for row in m)


def flatten(m: Matrix) -> Vector:
    """Row-major entries as one vector."""
    return tuple(x for row in m for x in row)


def unflatten(v: Sequence[Fraction], n: int) -> Matrix:
    """Inverse of :func:`flatten` for an ``n x n`` matrix."""
    return tuple(tuple(v[i * n + j] for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# Elementwise arithmetic
# ---------------------------------------------------------------------------


def transpose(m: Matrix) -> Matrix:
    """Transpose."""
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product."""
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    """Matrix times column vector."""
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    """Entrywise sum."""
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    """Entrywise difference."""
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    """Multiply every entry by ``c``."""
    c = as_fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def linear_combination(coeffs: Sequence[Fraction], mats: Sequence[Matrix]) -> Matrix:
    """Return ``sum(c * M)``; all matrices share one shape."""
    rows, cols = shape(mats[0])
    return tuple(tuple(sum((c * m[i][j] for c, m in zip(coeffs, mats)), ZERO) for j in range(cols)) for i in range(rows))


def commutator_is_zero(a: Matrix, b: Matrix) -> bool:
    """True when ``AB == BA``."""
    return matmul(a, b) == matmul(b, a)


def is_zero(m) -> bool:
    """True for a zero vector or a zero matrix."""
    if m and isinstance(m[0], tuple):
        return all(x == 0 for row in m for x in row)
    return all(x == 0 for x in m)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    """Dot product."""
    return sum((x * y for x, y in zip(u, v)), ZERO)


def vec_add(u: Sequence, v: Sequence) -> tuple:
    """Sum of two vectors."""
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    """Difference of two vectors."""
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(c, v: Sequence) -> tuple:
    """Scalar multiple of a vector."""
    return tuple(c * x for x in v)


def trace(m: Matrix) -> Fraction:
    """Trace."""
    return sum((m[i][i] for i in range(len(m))), ZERO)


def matrix_power(m: Matrix, k: int) -> Matrix:
    """``m^k`` by repeated multiplication."""
    result = identity(len(m))
    for _ in range(k):
        result = matmul(result, m)
    return result


# ---------------------------------------------------------------------------
# Elimination (delegated to sympy)
# ---------------------------------------------------------------------------


def rank(m: Matrix) -> int:
    """Rank over the rationals."""
    if not m or not m[0]:
        return 0
    return to_sympy(m).rank()


def nullspace(m: Matrix) -> List[Vector]:
    """Basis of ``{x : m x = 0}``, in sympy's reduced-echelon form."""
    return [tuple(as_fraction(x) for x in col) for col in to_sympy(m).nullspace()]


def determinant(m: Matrix) -> Fraction:
    """Exact determinant; one for the empty matrix."""
    if not m:
        return ONE
    return as_fraction(to_sympy(m).det())


def inverse(m: Matrix) -> Optional[Matrix]:
    """Return the inverse, or ``None`` when ``m`` is singular."""
    if determinant(m) == 0:
        return None
    return from_sympy(to_sympy(m).inv())


def solve(m: Matrix, b: Sequence[Fraction]) -> Optional[Vector]:
    """One solution of ``m x = b`` (free variables set to zero), or ``None``."""
    return LinearSystem(m).solve(b)


def pivot_columns(m: Matrix) -> Tuple[int, ...]:
    """Pivot columns of the reduced row echelon form."""
    if not m or not m[0]:
        return ()
    return tuple(to_sympy(m).rref()[1])


def independent_subset(vectors: Sequence[Vector]) -> List[Vector]:
    """Greedy maximal independent subset, keeping the input order."""
    if not vectors:
        return []
    return [vectors[j] for j in pivot_columns(columns_to_matrix(vectors))]


def span_rank(vectors: Sequence[Vector]) -> int:
    """Dimension of the span of the given vectors."""
    return len(independent_subset(vectors))


def in_span(vectors: Sequence[Vector], v: Vector) -> bool:
    """True when ``v`` is a linear combination of ``vectors``."""
    if not vectors:
        return is_zero(v)
    return LinearSystem(columns_to_matrix(vectors)).solve(v) is not None


def coordinates_in(vectors: Sequence[Vector], v: Vector) -> Optional[Vector]:
    """Coefficients of ``v`` in the independent family ``vectors``, if ``v`` lies in their span."""
    if not vectors:
        return () if is_zero(v) else None
    return LinearSystem(columns_to_matrix(vectors)).solve(v)


class LinearSystem:
    """Reusable solver for ``M x = b`` with a fixed ``M`` and many right-hand sides.

    The reduced echelon form of ``[M | I]`` is computed once; afterwards each
    solve is plain fraction arithmetic.
    """

    def __init__(self, m: Matrix):
        """Factor ``m`` once."""
        self.rows, self.cols = shape(m)
        if self.rows == 0:
            self.rank = 0
            self.pivots: Tuple[int, ...] = ()
            self._transform: Matrix = ()
            self._nullspace: Optional[List[Vector]] = [unit_vector(self.cols, j) for j in range(self.cols)]
            return
        augmented = to_sympy(m).row_join(sp.eye(self.rows))
        reduced, pivots = augmented.rref()
        self.pivots = tuple(p for p in pivots if p < self.cols)
        self.rank = len(self.pivots)
        self._transform = from_sympy(reduced[:, self.cols :])
        self._matrix = m
        self._nullspace = None

    def solve(self, b: Sequence[Fraction]) -> Optional[Vector]:
        """Return a particular solution, or ``None`` if the system is inconsistent."""
        if self.rows == 0:
            return tuple(ZERO for _ in range(self.cols))
        c = matvec(self._transform, b)
        if any(x != 0 for x in c[self.rank :]):
            return None
        solution = [ZERO] * self.cols
        for row, col in enumerate(self.pivots):
            solution[col] = c[row]
        return tuple(solution)

    @property
    def nullspace(self) -> List[Vector]:
        """Basis of the solution space of the homogeneous system."""
        if self._nullspace is None:
            self._nullspace = nullspace(self._matrix)
        return self._nullspace
