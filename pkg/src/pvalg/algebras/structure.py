"""Radical, locality and the decomposition into local summands."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy as sp
from loguru import logger

from ..core import linalg
from ..core.config import DEFAULT_CONFIG, RunConfig
from ..core.errors import NonSplitResidueError, PvalgError
from ..core.linalg import Vector
from ..core.rationals import as_fraction
from .finite import FiniteAlgebra, require_axioms


@dataclass(frozen=True)
class LocalDecomposition:
    """``A = A_1 + ... + A_r`` with primitive orthogonal idempotents ``e_i``.

    ``summand_bases[i]`` lists the basis of ``e_i A`` in the coordinates of
    ``A``; ``summands[i]`` is ``e_i A`` as an algebra in that basis.
    """

    idempotents: Tuple[Vector, ...]
    summand_bases: Tuple[Tuple[Vector, ...], ...]
    summands: Tuple[FiniteAlgebra, ...]

    @property
    def rank(self) -> int:
        """Number of local summands."""
        return len(self.idempotents)

    @property
    def dims(self) -> Tuple[int, ...]:
        """Dimensions of the local summands."""
        return tuple(s.dim for s in self.summands)


def nilradical(a: FiniteAlgebra) -> List[Vector]:
    """Basis of the kernel of the trace form ``(x, y) -> trace(L_{xy})``.

    Raises:
        AxiomViolationError: ``a`` is not commutative, associative and unital.

    """
    require_axioms(a)
    t = a.trace_vector
    gram = tuple(tuple(linalg.dot(a.structure[i][j], t) for j in range(a.dim)) for i in range(a.dim))
    return linalg.nullspace(gram)


def is_geometrically_local(a: FiniteAlgebra) -> bool:
    """True iff the nilradical has codimension 1."""
    return a.dim - len(nilradical(a)) == 1


def _weights(n: int, attempt: int, config: RunConfig, rng) -> List[int]:
    if attempt == 0:
        return [2**i for i in range(n)]
    return [int(w) for w in rng.integers(-config.point_bound, config.point_bound + 1, size=n)]


def _split_roots(a: FiniteAlgebra, r: int, config: RunConfig) -> Tuple[Vector, List[Fraction]]:
    """Find an element whose residue separates the ``r`` points of ``Spec(A/N)``."""
    x = sp.Symbol("x")
    rng = config.rng()
    for attempt in range(config.retries + 1):
        w = _weights(a.dim, attempt, config, rng)
        element = tuple(Fraction(c) for c in w)
        charpoly = linalg.to_sympy(a.mult_operator(element)).charpoly(x).as_expr()
        _, factors = sp.factor_list(charpoly, x, domain="QQ")
        roots = set()
        for factor, _mult in factors:
            degree = sp.degree(factor, x)
            if degree > 1:
                raise NonSplitResidueError(f"characteristic polynomial has the irreducible factor {factor} over the rationals")
            if degree == 1:
                lead, constant = sp.Poly(factor, x).all_coeffs()
                roots.add(-as_fraction(constant) / as_fraction(lead))
        if len(roots) == r:
            return element, sorted(roots)
        logger.debug(f"local_decomposition: element {w} gives {len(roots)} residues, need {r}; retrying")
        if attempt == 0:
            logger.warning("local_decomposition: weighted element does not separate residues, using seeded retries")
    raise NonSplitResidueError(f"no element separating the {r} residue points was found after {config.retries + 1} attempts")


def _refine_idempotent(a: FiniteAlgebra, e: Vector) -> Vector:
    """Lift a residue idempotent with ``e <- 3e^2 - 2e^3``."""
    limit = math.ceil(math.log2(max(a.dim, 2))) + 2
    for _ in range(limit):
        e2 = a.multiply(e, e)
        if e2 == e:
            return e
        e3 = a.multiply(e2, e)
        e = linalg.vec_sub(linalg.vec_scale(3, e2), linalg.vec_scale(2, e3))
    if a.multiply(e, e) != e:
        raise PvalgError("idempotent refinement did not converge")
    return e


def _summand(a: FiniteAlgebra, e: Vector, index: int) -> Tuple[Tuple[Vector, ...], FiniteAlgebra]:
    op = a.mult_operator(e)
    pivots = linalg.pivot_columns(op)
    basis = tuple(linalg.column(op, p) for p in pivots)
    labels = []
    for p, v in zip(pivots, basis):
        labels.append(a.basis_labels[p] if v == a.basis_vector(p) else f"e{index + 1}*{a.basis_labels[p]}")
    system = linalg.LinearSystem(linalg.columns_to_matrix(basis))
    structure = tuple(tuple(system.solve(a.multiply(u, w)) for w in basis) for u in basis)
    unit = system.solve(e)
    return basis, FiniteAlgebra(len(basis), tuple(labels), structure, unit)


def local_decomposition(a: FiniteAlgebra, config: RunConfig = DEFAULT_CONFIG) -> LocalDecomposition:
    """Split ``a`` into local summands over the rationals.

    Raises:
        NonSplitResidueError: the residue algebra needs a field extension to split.

    """
    radical = nilradical(a)
    r = a.dim - len(radical)
    if r == 1:
        basis = tuple(a.basis_vector(i) for i in range(a.dim))
        return LocalDecomposition((a.unit,), (basis,), (a,))

    element, roots = _split_roots(a, r, config)
    idempotents = []
    for i, c in enumerate(roots):
        e = a.unit
        for j, d in enumerate(roots):
            if j != i:
                factor = linalg.vec_scale(1 / (c - d), linalg.vec_sub(element, linalg.vec_scale(d, a.unit)))
                e = a.multiply(e, factor)
        idempotents.append(_refine_idempotent(a, e))

    total = a.zero()
    for i, e in enumerate(idempotents):
        total = linalg.vec_add(total, e)
        for f in idempotents[i + 1 :]:
            if not linalg.is_zero(a.multiply(e, f)):
                raise PvalgError("lifted idempotents are not orthogonal")
    if total != a.unit:
        raise PvalgError("lifted idempotents do not sum to 1")

    pieces = [(linalg.pivot_columns(a.mult_operator(e))[0], k, e) for k, e in enumerate(idempotents)]
    pieces.sort(key=lambda item: (item[0], item[1]))
    ordered = [e for _, _, e in pieces]
    bases, summands = [], []
    for i, e in enumerate(ordered):
        basis, summand = _summand(a, e, i)
        bases.append(basis)
        summands.append(summand)
    logger.debug(f"local_decomposition: {r} summands of dimensions {[s.dim for s in summands]}")
    return LocalDecomposition(tuple(ordered), tuple(bases), tuple(summands))


def unit_hyperplanes(a: FiniteAlgebra, decomposition: Optional[LocalDecomposition] = None) -> List[Vector]:
    """One linear form per local summand; ``x`` is a unit iff every form is non-zero at ``x``.

    Form ``i`` sends ``x`` to ``trace(L_{e_i x}) / dim A_i``, the residue of
    ``e_i x`` in ``A_i / m_i``.
    """
    decomposition = decomposition or local_decomposition(a)
    t = a.trace_vector
    forms = []
    for e, summand in zip(decomposition.idempotents, decomposition.summands):
        forms.append(tuple(linalg.dot(a.multiply(e, a.basis_vector(j)), t) / summand.dim for j in range(a.dim)))
    return forms


def associated(a: FiniteAlgebra, x: Sequence, y: Sequence, hyperplanes: Optional[Sequence[Vector]] = None) -> bool:
    """True iff ``u * x = y`` for some unit ``u``.

    The solutions of ``L_x u = y`` form an affine space; it contains a unit
    unless some hyperplane form vanishes on all of it.
    """
    x, y = linalg.vector(x), linalg.vector(y)
    forms = hyperplanes if hyperplanes is not None else unit_hyperplanes(a)
    system = linalg.LinearSystem(a.mult_operator(x))
    u0 = system.solve(y)
    if u0 is None:
        return False
    kernel = system.nullspace
    for f in forms:
        if linalg.dot(f, u0) == 0 and all(linalg.dot(f, k) == 0 for k in kernel):
            return False
    return True
