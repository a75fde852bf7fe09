"""Buchberger's algorithm and finite quotient bases.

Turns the generators of a presentation into the reduced Gröbner basis of
their ideal, then into the standard-monomial basis of the quotient.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from .core.errors import InfiniteDimensionalError, VariableMismatchError
from .core.linalg import Vector
from .polyring import DEGREVLEX, Monomial, Polynomial, TermOrder, mono_div, mono_divides, mono_lcm, mono_mul

_Terms = Dict[Monomial, Fraction]


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis: monic elements sorted ascending by leading monomial."""

    variables: Tuple[str, ...]
    order: TermOrder
    elements: Tuple[Polynomial, ...]

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        """Leading monomial of each element."""
        return tuple(g.leading_monomial(self.order) for g in self.elements)

    def is_unit_ideal(self) -> bool:
        """True when some element is a nonzero constant."""
        return any(not any(m) for m in self.leading_monomials)

    def __len__(self):
        """Number of elements."""
        return len(self.elements)

    def __iter__(self):
        """Iterate over the elements."""
        return iter(self.elements)


@dataclass(frozen=True)
class QuotientBasis:
    """Standard monomials of a zero-dimensional quotient, ascending in the term order."""

    variables: Tuple[str, ...]
    order: TermOrder
    monomials: Tuple[Monomial, ...]

    def __len__(self):
        """Dimension of the quotient."""
        return len(self.monomials)

    def __iter__(self):
        """Iterate over the standard monomials."""
        return iter(self.monomials)

    def index(self, mono: Sequence[int]) -> int:
        """Position of a standard monomial."""
        return self.monomials.index(tuple(mono))

    @property
    def labels(self) -> Tuple[str, ...]:
        """Standard monomials as text, e.g. ``x1^2``."""
        return tuple(monomial_label(self.variables, m) for m in self.monomials)


def monomial_label(variables: Sequence[str], mono: Monomial) -> str:
    """Render an exponent vector as a monomial."""
    return Polynomial.monomial(variables, mono).to_text()


# ---------------------------------------------------------------------------
# Division
# ---------------------------------------------------------------------------


def _divide(terms: _Terms, divisors: Sequence[Tuple[Monomial, _Terms]], order: TermOrder) -> _Terms:
    """Full multivariate division by monic divisors; returns the remainder."""
    p = dict(terms)
    remainder: _Terms = {}
    while p:
        m = order.max(p)
        c = p[m]
        for lm, g in divisors:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                for gm, gc in g.items():
                    t = mono_mul(gm, q)
                    v = p.get(t, 0) - c * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            remainder[m] = c
            del p[m]
    return remainder


def _monic_terms(terms: _Terms, order: TermOrder) -> Tuple[Monomial, _Terms]:
    lm = order.max(terms)
    lc = terms[lm]
    return lm, {m: c / lc for m, c in terms.items()}


def _s_polynomial(f: Tuple[Monomial, _Terms], g: Tuple[Monomial, _Terms]) -> _Terms:
    lcm = mono_lcm(f[0], g[0])
    out: _Terms = {}
    for (lm, terms), sign in ((f, 1), (g, -1)):
        q = mono_div(lcm, lm)
        for m, c in terms.items():
            t = mono_mul(m, q)
            v = out.get(t, 0) + sign * c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------


def buchberger(gens: Sequence[Polynomial], order: TermOrder = DEGREVLEX, variables: Optional[Sequence[str]] = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are processed smallest lcm first; pairs with coprime leading
    monomials are skipped. ``variables`` is only needed when ``gens`` is empty.
    """
    if variables is None:
        if not gens:
            raise VariableMismatchError("variables are required for an empty generator list")
        variables = gens[0].variables
    variables = tuple(variables)
    for g in gens:
        if g.variables != variables:
            raise VariableMismatchError(f"generator {g} is over {g.variables}, expected {variables}")

    basis: List[Tuple[Monomial, _Terms]] = [_monic_terms(g.terms, order) for g in gens if not g.is_zero()]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    processed = 0
    while pairs:
        best = min(range(len(pairs)), key=lambda k: (order.key(mono_lcm(basis[pairs[k][0]][0], basis[pairs[k][1]][0])), pairs[k]))
        i, j = pairs.pop(best)
        processed += 1
        lm_i, lm_j = basis[i][0], basis[j][0]
        if mono_lcm(lm_i, lm_j) == mono_mul(lm_i, lm_j):
            continue
        remainder = _divide(_s_polynomial(basis[i], basis[j]), basis, order)
        if remainder:
            basis.append(_monic_terms(remainder, order))
            new = len(basis) - 1
            pairs.extend((k, new) for k in range(new))
    logger.debug(f"buchberger: {processed} pairs processed, {len(basis)} elements before reduction")

    # minimize: drop elements whose leading monomial is divisible by another's
    minimal: List[Tuple[Monomial, _Terms]] = []
    for k, (lm, terms) in enumerate(basis):
        if any(mono_divides(other, lm) and (other != lm or idx < k) for idx, (other, _) in enumerate(basis) if idx != k):
            continue
        minimal.append((lm, terms))

    reduced: List[Tuple[Monomial, _Terms]] = []
    for k, (lm, terms) in enumerate(minimal):
        others = [entry for idx, entry in enumerate(minimal) if idx != k]
        tail = {m: c for m, c in terms.items() if m != lm}
        new_terms = _divide(tail, others, order)
        new_terms[lm] = Fraction(1)
        reduced.append((lm, new_terms))

    reduced.sort(key=lambda entry: order.key(entry[0]))
    elements = tuple(Polynomial(variables, terms) for _, terms in reduced)
    return GroebnerBasis(variables, order, elements)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of ``p`` on division by ``gb``; no term is divisible by a leading monomial."""
    if p.variables != gb.variables:
        raise VariableMismatchError(f"polynomial over {p.variables}, basis over {gb.variables}")
    divisors = [(g.leading_monomial(gb.order), g.terms) for g in gb.elements]
    return Polynomial(gb.variables, _divide(p.terms, divisors, gb.order))


def standard_monomials(gb: GroebnerBasis) -> QuotientBasis:
    """All monomials outside the leading-monomial ideal, ascending in the order.

    Raises:
        InfiniteDimensionalError: some variable has no pure power among the leading monomials.

    """
    leading = gb.leading_monomials
    if gb.is_unit_ideal():
        return QuotientBasis(gb.variables, gb.order, ())
    bounds = []
    for i, name in enumerate(gb.variables):
        powers = [m[i] for m in leading if m[i] and all(e == 0 for k, e in enumerate(m) if k != i)]
        if not powers:
            raise InfiniteDimensionalError(f"quotient is infinite-dimensional: no power of {name} lies in the leading ideal")
        bounds.append(min(powers))
    monos = [m for m in product(*(range(b) for b in bounds)) if not any(mono_divides(lm, m) for lm in leading)]
    return QuotientBasis(gb.variables, gb.order, tuple(gb.order.sorted(monos)))


def quotient_coordinates(p: Polynomial, gb: GroebnerBasis, basis: QuotientBasis) -> Vector:
    """Coordinates of ``normal_form(p)`` in the standard-monomial basis."""
    nf = normal_form(p, gb)
    coords = [Fraction(0)] * len(basis)
    for mono, coeff in nf.items():
        coords[basis.index(mono)] = coeff
    return tuple(coords)
