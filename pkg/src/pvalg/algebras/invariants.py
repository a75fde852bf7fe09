"""Isomorphism invariants of local algebras and one-sided separation certificates."""

from dataclasses import dataclass, fields
from typing import List, Tuple, Union

from ..core import linalg
from ..core.config import DEFAULT_CONFIG, RunConfig
from ..core.errors import NotLocalError
from ..core.linalg import Vector
from .finite import FiniteAlgebra
from .structure import local_decomposition, nilradical


def _radical_if_local(a: FiniteAlgebra) -> List[Vector]:
    radical = nilradical(a)
    if a.dim - len(radical) != 1:
        raise NotLocalError(f"algebra of dimension {a.dim} is not local (nilradical has codimension {a.dim - len(radical)})")
    return radical


def _product_span(a: FiniteAlgebra, left: List[Vector], right: List[Vector]) -> List[Vector]:
    products = [a.multiply(u, w) for u in left for w in right]
    return linalg.independent_subset([p for p in products if not linalg.is_zero(p)])


def radical_powers(a: FiniteAlgebra) -> List[List[Vector]]:
    """Bases of ``m^0 = A, m, m^2, ...`` up to and including the first zero power."""
    m = _radical_if_local(a)
    powers = [[a.basis_vector(i) for i in range(a.dim)], m]
    while powers[-1]:
        powers.append(_product_span(a, powers[-1], m))
    return powers


def hilbert_function(a: FiniteAlgebra) -> Tuple[int, ...]:
    """``dim m^i / m^(i+1)`` for ``i = 0, 1, ...`` while ``m^i`` is non-zero."""
    dims = [len(p) for p in radical_powers(a)]
    return tuple(dims[i] - dims[i + 1] for i in range(len(dims) - 1))


def annihilator(a: FiniteAlgebra, ideal: List[Vector]) -> List[Vector]:
    """Basis of ``{x : x*y = 0 for every y in ideal}``."""
    if not ideal:
        return [a.basis_vector(i) for i in range(a.dim)]
    rows = tuple(row for y in ideal for row in a.mult_operator(y))
    return linalg.nullspace(rows)


def socle(a: FiniteAlgebra) -> List[Vector]:
    """``ann(m)``; the socle of ``K`` is all of ``K``."""
    return annihilator(a, _radical_if_local(a))


def ann_filtration(a: FiniteAlgebra) -> Tuple[int, ...]:
    """``dim ann(m^i)`` for ``i = 0..L`` where ``m^L = 0``."""
    return tuple(len(annihilator(a, power)) for power in radical_powers(a))


@dataclass(frozen=True)
class Fingerprint:
    """Invariants compared, in field order, by :func:`certify_nonisomorphic`."""

    dim: int
    hilbert: Tuple[int, ...]
    socle_dim: int
    ann_filtration: Tuple[int, ...]
    embedding_dim: int

    def to_dict(self) -> dict:
        """Field name to value."""
        return {f.name: getattr(self, f.name) for f in fields(self)}


INVARIANTS: Tuple[str, ...] = tuple(f.name for f in fields(Fingerprint))


def fingerprint(a: FiniteAlgebra) -> Fingerprint:
    """Hilbert function, socle and annihilator filtration of a local algebra."""
    powers = radical_powers(a)
    dims = [len(p) for p in powers]
    hilbert = tuple(dims[i] - dims[i + 1] for i in range(len(dims) - 1))
    filtration = tuple(len(annihilator(a, p)) for p in powers)
    return Fingerprint(
        dim=a.dim,
        hilbert=hilbert,
        socle_dim=filtration[1],
        ann_filtration=filtration,
        embedding_dim=hilbert[1] if len(hilbert) > 1 else 0,
    )


def render_value(value) -> str:
    """Text form of an invariant value."""
    if isinstance(value, tuple):
        return "(" + ",".join(str(v) for v in value) + ")"
    return str(value)


@dataclass(frozen=True)
class Separation:
    """The first invariant on which two algebras differ: a non-isomorphism certificate."""

    invariant: str
    left: object
    right: object

    def rendered(self) -> Tuple[str, str]:
        """Both values as text; tuples print as ``(1,2,1)``."""
        return render_value(self.left), render_value(self.right)


@dataclass(frozen=True)
class Inconclusive:
    """Every implemented invariant agrees; nothing is claimed."""

    checked: Tuple[str, ...] = INVARIANTS


Comparison = Union[Separation, Inconclusive]


def compare_fingerprints(fa: Fingerprint, fb: Fingerprint) -> Comparison:
    """First differing invariant, or :class:`Inconclusive`."""
    for name in INVARIANTS:
        left, right = getattr(fa, name), getattr(fb, name)
        if left != right:
            return Separation(name, left, right)
    return Inconclusive()


def certify_nonisomorphic(a: FiniteAlgebra, b: FiniteAlgebra) -> Comparison:
    """Separate two local algebras by the first differing fingerprint field."""
    return compare_fingerprints(fingerprint(a), fingerprint(b))


def verify_separation(sep: Separation, a: FiniteAlgebra, b: FiniteAlgebra) -> bool:
    """Re-check a certificate against freshly computed invariants."""
    left, right = getattr(fingerprint(a), sep.invariant), getattr(fingerprint(b), sep.invariant)
    return left == sep.left and right == sep.right and left != right


def is_chain(a: FiniteAlgebra) -> bool:
    """True iff ``dim m/m^2 <= 1``, i.e. ``a`` is ``K[x]/(x^k)``."""
    hilbert = hilbert_function(a)
    return len(hilbert) < 2 or hilbert[1] <= 1


def is_square_zero_radical(a: FiniteAlgebra, config: RunConfig = DEFAULT_CONFIG) -> bool:
    """True iff ``m_i^2 = 0`` in every local summand."""
    for summand in local_decomposition(a, config).summands:
        m = nilradical(summand)
        if any(not linalg.is_zero(summand.multiply(u, w)) for u in m for w in m):
            return False
    return True
