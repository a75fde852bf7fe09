"""From an algebra to its module: ``G(A)`` acting on ``A`` by multiplication.

Each local summand ``A_i`` contributes a torus parameter ``l_i`` and one
additive parameter ``a_j`` per radical basis vector ``b_j``. The group element
``l_i * exp(sum a_j b_j)`` acts on ``A_i`` by multiplication; its matrix in the
chosen basis is the block of the representation. Column vectors are used
throughout and ``rho`` acts on the left.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import sympy as sp

from .algebras.finite import FiniteAlgebra, change_basis
from .algebras.structure import local_decomposition, nilradical
from .core import linalg
from .core.config import DEFAULT_CONFIG, RunConfig
from .core.errors import InvalidBasisError, NotNilpotentError, NotUnipotentError, ParameterError
from .core.linalg import Matrix, Vector
from .core.rationals import as_fraction, format_rational
from .groebner import quotient_coordinates
from .models import RepModel
from .polyring import Polynomial
from .prehom import MatrixGroupInput
from .presentations import parse_polynomial

PolyMatrix = Tuple[Tuple[Polynomial, ...], ...]


# ---------------------------------------------------------------------------
# exp and log
# ---------------------------------------------------------------------------


def _is_zero(v: Sequence) -> bool:
    return not any(v)


def _nilpotent_powers(a: FiniteAlgebra, x: Sequence) -> Optional[List[tuple]]:
    """``[x, x^2, ...]`` up to the last non-zero power, or ``None`` if ``x^n != 0``."""
    powers = []
    current = tuple(x)
    for _ in range(a.dim):
        if _is_zero(current):
            return powers
        powers.append(current)
        current = a.multiply(current, x)
    return powers if _is_zero(current) else None


def exp_element(a: FiniteAlgebra, x: Sequence) -> tuple:
    """``sum x^k / k!`` for nilpotent ``x``; coordinates may be polynomials.

    Raises:
        NotNilpotentError: ``x^n != 0``.

    """
    a.check_element(x)
    powers = _nilpotent_powers(a, x)
    if powers is None:
        raise NotNilpotentError("exp is only defined on nilpotent elements")
    result = a.power(x, 0)
    for k, p in enumerate(powers, start=1):
        result = linalg.vec_add(result, linalg.vec_scale(Fraction(1, factorial(k)), p))
    return result


def log_element(a: FiniteAlgebra, u: Sequence) -> tuple:
    """``sum (-1)^(k+1) m^k / k`` for ``u = 1 + m`` with ``m`` nilpotent.

    Raises:
        NotUnipotentError: ``u - 1`` is not nilpotent.

    """
    a.check_element(u)
    m = linalg.vec_sub(u, a.power(u, 0))
    powers = _nilpotent_powers(a, m)
    if powers is None:
        raise NotUnipotentError("log is only defined on 1 + (nilpotent)")
    result = linalg.vec_scale(Fraction(0), m)
    for k, p in enumerate(powers, start=1):
        result = linalg.vec_add(result, linalg.vec_scale(Fraction((-1) ** (k + 1), k), p))
    return result


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParamMatrixRep:
    """``rho(l, a)`` as a matrix of polynomials in the torus and additive parameters.

    Attributes:
        torus_params: ``l1..lr``, one per local summand.
        additive_params: ``a1..as``, one per radical basis vector.
        entries: ``n x n`` polynomials over ``torus_params + additive_params``.
        layout: Row indices of each summand block.
        basis_labels: Labels of the module basis.
        unit: Coordinates of ``1`` in the module basis.
        basis: Module basis vectors in the coordinates of the source algebra.

    """

    n: int
    torus_params: Tuple[str, ...]
    additive_params: Tuple[str, ...]
    entries: PolyMatrix
    layout: Tuple[Tuple[int, ...], ...]
    basis_labels: Tuple[str, ...]
    unit: Vector
    basis: Tuple[Vector, ...] = ()

    @property
    def variables(self) -> Tuple[str, ...]:
        """Torus then additive parameters."""
        return self.torus_params + self.additive_params

    @property
    def parameter_count(self) -> int:
        """Number of group parameters."""
        return len(self.torus_params) + len(self.additive_params)


def _param_names(prefix: str, count: int) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(count))


def _adapted(summand: FiniteAlgebra) -> Tuple[FiniteAlgebra, Matrix, int]:
    """Return the summand in a basis ``(unit, radical basis)`` unless it already has that shape."""
    n = summand.dim
    radical = nilradical(summand)
    unit_positions = [i for i in range(n) if summand.unit == summand.basis_vector(i)]
    if unit_positions:
        p = unit_positions[0]
        if all(linalg.in_span(radical, summand.basis_vector(j)) for j in range(n) if j != p):
            return summand, linalg.identity(n), p
    columns = linalg.columns_to_matrix([summand.unit] + list(radical))
    labels = ("1",) + tuple(f"r{k + 1}" for k in range(len(radical)))
    return change_basis(summand, columns, labels), columns, 0


def override_basis(a: FiniteAlgebra, basis_override: Sequence[str]) -> Tuple[FiniteAlgebra, Matrix]:
    """Re-express a quotient algebra in a basis of monomials or polynomials given as text.

    Raises:
        InvalidBasisError: the texts do not form a basis of the quotient.

    """
    if a.presentation is None or a.groebner is None or a.quotient_basis is None:
        raise InvalidBasisError("basis overrides need an algebra built from a presentation")
    if len(basis_override) != a.dim:
        raise InvalidBasisError(f"basis has {len(basis_override)} elements, the quotient has dimension {a.dim}")
    variables = a.presentation.variables
    columns = []
    for text in basis_override:
        try:
            p = parse_polynomial(text, variables)
        except ValueError as exc:
            raise InvalidBasisError(f"cannot read basis element '{text}': {exc}") from exc
        columns.append(quotient_coordinates(p, a.groebner, a.quotient_basis))
    matrix = linalg.columns_to_matrix(columns)
    if linalg.determinant(matrix) == 0:
        raise InvalidBasisError(f"{', '.join(basis_override)} is not a basis of the quotient")
    return change_basis(a, matrix, [t.strip() for t in basis_override]), matrix


def matrix_rep(a: FiniteAlgebra, basis_override: Optional[Sequence[str]] = None, config: RunConfig = DEFAULT_CONFIG) -> ParamMatrixRep:
    """Parameterized matrix of ``G(A)`` acting on ``A``.

    Raises:
        NonSplitResidueError: ``a`` does not decompose over the rationals.
        InvalidBasisError: ``basis_override`` is not a basis of the quotient.

    """
    to_source = linalg.identity(a.dim)
    working = a
    if basis_override is not None:
        working, to_source = override_basis(a, basis_override)
    dec = local_decomposition(working, config)
    r = dec.rank
    s = working.dim - r
    torus = _param_names("l", r)
    additive = _param_names("a", s)
    variables = torus + additive
    zero = Polynomial.zero(variables)
    n = working.dim

    entries = [[zero] * n for _ in range(n)]
    layout: List[Tuple[int, ...]] = []
    labels: List[str] = []
    unit: List[Fraction] = [Fraction(0)] * n
    basis: List[Vector] = []
    offset = 0
    next_additive = 0
    for i, (summand, summand_basis) in enumerate(zip(dec.summands, dec.summand_bases)):
        adapted, columns, unit_pos = _adapted(summand)
        k = adapted.dim
        radical_positions = [j for j in range(k) if j != unit_pos]
        coords = [zero] * k
        for j in radical_positions:
            coords[j] = Polynomial.gen(variables, additive[next_additive])
            next_additive += 1
        block = adapted.mult_operator(exp_element(adapted, coords))
        lam = Polynomial.gen(variables, torus[i])
        for row in range(k):
            for col in range(k):
                entries[offset + row][offset + col] = lam * block[row][col]
        layout.append(tuple(range(offset, offset + k)))
        labels.extend(adapted.basis_labels)
        unit[offset + unit_pos] = Fraction(1)
        # adapted basis vector: summand basis combined by the adapting columns, then mapped to source coordinates
        for col in range(k):
            in_working = working.zero()
            for row in range(k):
                in_working = linalg.vec_add(in_working, linalg.vec_scale(columns[row][col], summand_basis[row]))
            basis.append(linalg.matvec(to_source, in_working))
        offset += k

    return ParamMatrixRep(
        n=n,
        torus_params=torus,
        additive_params=additive,
        entries=tuple(tuple(row) for row in entries),
        layout=tuple(layout),
        basis_labels=tuple(labels),
        unit=tuple(unit),
        basis=tuple(basis),
    )


def identity_values(rep: ParamMatrixRep) -> Dict[str, Fraction]:
    """Torus parameters at one, additive parameters at zero."""
    values = {name: Fraction(1) for name in rep.torus_params}
    values.update({name: Fraction(0) for name in rep.additive_params})
    return values


def evaluate_rep(rep: ParamMatrixRep, values: Mapping[str, object]) -> Matrix:
    """Substitute rationals for every parameter.

    Raises:
        ParameterError: a parameter is missing or unknown, or a torus value is zero.

    """
    known = set(rep.variables)
    unknown = sorted(set(values) - known)
    if unknown:
        raise ParameterError(f"unknown parameters: {', '.join(unknown)} (expected {', '.join(rep.variables)})")
    missing = [name for name in rep.variables if name not in values]
    if missing:
        raise ParameterError(f"missing values for parameters: {', '.join(missing)}")
    point = {name: as_fraction(values[name]) for name in rep.variables}
    for name in rep.torus_params:
        if point[name] == 0:
            raise ParameterError(f"torus parameter {name} must be non-zero")
    return tuple(tuple(entry.evaluate(point) for entry in row) for row in rep.entries)


def _doubled(rep: ParamMatrixRep) -> Tuple[Tuple[str, ...], Dict[str, str]]:
    """Second alphabet ``m1..mr, b1..bs`` and the doubled variable tuple."""
    second = {name: "m" + name[1:] for name in rep.torus_params}
    second.update({name: "b" + name[1:] for name in rep.additive_params})
    return rep.variables + tuple(second[v] for v in rep.variables), second


def verify_homomorphism(rep: ParamMatrixRep) -> bool:
    """Check ``rho(l, a) rho(m, b) = rho(l*m, a + b)`` symbolically."""
    doubled, second = _doubled(rep)
    left = tuple(tuple(e.embed(doubled) for e in row) for row in rep.entries)
    right = tuple(tuple(e.rename(second).embed(doubled) for e in row) for row in rep.entries)
    product = linalg.matmul(left, right)
    assignment = {}
    for name in rep.torus_params:
        assignment[name] = Polynomial.gen(doubled, name) * Polynomial.gen(doubled, second[name])
    for name in rep.additive_params:
        assignment[name] = Polynomial.gen(doubled, name) + Polynomial.gen(doubled, second[name])
    for i in range(rep.n):
        for j in range(rep.n):
            expected = rep.entries[i][j].substitute(assignment, variables=doubled)
            if product[i][j] != expected:
                return False
    return True


def det_rep(rep: ParamMatrixRep) -> Polynomial:
    """Exact symbolic determinant of ``rho``."""
    symbols = {name: sp.Symbol(name) for name in rep.variables}
    m = sp.Matrix([[e.to_sympy(symbols) for e in row] for row in rep.entries])
    return Polynomial.from_sympy(m.det(method="berkowitz"), rep.variables, symbols)


def expected_determinant(rep: ParamMatrixRep) -> Polynomial:
    """``prod l_i^(n_i)`` over the summand blocks."""
    result = Polynomial.one(rep.variables)
    for name, block in zip(rep.torus_params, rep.layout):
        result = result * Polynomial.gen(rep.variables, name) ** len(block)
    return result


def lie_algebra(rep: ParamMatrixRep) -> MatrixGroupInput:
    """Derivatives of ``rho`` in each parameter at the identity, based at the unit."""
    at_identity = identity_values(rep)
    lie = []
    for name in rep.variables:
        lie.append(tuple(tuple(e.diff(name).evaluate(at_identity) for e in row) for row in rep.entries))
    return MatrixGroupInput(rep.n, tuple(lie), rep.unit)


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------


def _latex_symbols(rep: ParamMatrixRep) -> Dict[str, sp.Symbol]:
    symbols = {}
    for name in rep.torus_params:
        symbols[name] = sp.Symbol("lambda") if len(rep.torus_params) == 1 else sp.Symbol(f"lambda_{name[1:]}")
    for name in rep.additive_params:
        symbols[name] = sp.Symbol(f"alpha_{name[1:]}")
    return symbols


def latex_matrix(cells: Sequence[Sequence[str]]) -> str:
    """Wrap cells in a ``pmatrix`` environment."""
    lines = ["  " + " & ".join(row) for row in cells]
    return "\\begin{pmatrix}\n" + " \\\\\n".join(lines) + "\n\\end{pmatrix}"


def to_latex(rep: ParamMatrixRep) -> str:
    """``pmatrix`` source with ``\\lambda``/``\\alpha`` symbols and the torus factor pulled out."""
    symbols = _latex_symbols(rep)
    return latex_matrix([[sp.latex(sp.factor_terms(e.to_sympy(symbols))) for e in row] for row in rep.entries])


def evaluated_latex(m: Matrix) -> str:
    """LaTeX for a rational matrix."""
    return latex_matrix([[sp.latex(sp.Rational(x.numerator, x.denominator)) for x in row] for row in m])


def rep_to_model(rep: ParamMatrixRep) -> RepModel:
    """Serialize the matrix entries as polynomial text."""
    return RepModel(
        n=rep.n,
        torus_params=list(rep.torus_params),
        additive_params=list(rep.additive_params),
        entries=[[e.to_text() for e in row] for row in rep.entries],
        layout=[list(block) for block in rep.layout],
        basis=list(rep.basis_labels),
        unit=[format_rational(x) for x in rep.unit],
    )


def rep_from_model(model: RepModel) -> ParamMatrixRep:
    """Rebuild a representation; the unit defaults to the first row of each block."""
    torus, additive = tuple(model.torus_params), tuple(model.additive_params)
    variables = torus + additive
    entries = tuple(tuple(parse_polynomial(text, variables) for text in row) for row in model.entries)
    if model.unit is not None:
        unit = linalg.vector(model.unit)
    else:
        unit = tuple(Fraction(1) if any(i == block[0] for block in model.layout) else Fraction(0) for i in range(model.n))
    labels = tuple(model.basis) if model.basis is not None else tuple(f"b{i + 1}" for i in range(model.n))
    return ParamMatrixRep(model.n, torus, additive, entries, tuple(tuple(b) for b in model.layout), labels, unit)
