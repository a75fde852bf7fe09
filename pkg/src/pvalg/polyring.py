"""Exact multivariate polynomials over the rationals.

A :class:`Polynomial` carries its ordered variable tuple and a map from dense
exponent vectors to non-zero :class:`~fractions.Fraction` coefficients.
Values are immutable; every operation returns a new polynomial. Polynomials
over different variable tuples never mix silently: use :meth:`Polynomial.embed`
or :meth:`Polynomial.rename` to move between variable sets.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy as sp

from .core.errors import PvalgError, VariableMismatchError
from .core.rationals import as_fraction, format_rational

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]

ORDER_KINDS = ("degrevlex", "lex")


# ---------------------------------------------------------------------------
# Monomials and term orders
# ---------------------------------------------------------------------------


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Product of monomials."""
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient ``a / b``; the caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    """Least common multiple."""
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    """Total degree."""
    return sum(a)


@dataclass(frozen=True)
class TermOrder:
    """A monomial order: ``degrevlex`` or ``lex`` over a variable precedence.

    ``precedence`` lists variable positions from largest to smallest; the empty
    tuple means the declared order (``x1 > x2 > ...``).
    """

    kind: str = "degrevlex"
    precedence: Tuple[int, ...] = ()

    def __post_init__(self):
        """Validate the order kind and the precedence permutation."""
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"term order must be one of {ORDER_KINDS} (got '{self.kind}')")
        if self.precedence and sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError("precedence must be a permutation of variable positions")

    @classmethod
    def from_names(cls, kind: str, variables: Sequence[str], precedence: Sequence[str]) -> "TermOrder":
        """Build an order from a precedence given as variable names."""
        index = {name: i for i, name in enumerate(variables)}
        missing = [name for name in precedence if name not in index]
        if missing or len(precedence) != len(variables):
            raise VariableMismatchError(f"precedence {list(precedence)} is not a permutation of {list(variables)}")
        return cls(kind, tuple(index[name] for name in precedence))

    def _positions(self, n: int) -> Tuple[int, ...]:
        if not self.precedence:
            return tuple(range(n))
        if len(self.precedence) != n:
            raise VariableMismatchError(f"term order covers {len(self.precedence)} variables, monomial has {n}")
        return self.precedence

    def key(self, mono: Monomial) -> tuple:
        """Sort key: a larger key means a larger monomial."""
        positions = self._positions(len(mono))
        if self.kind == "lex":
            return tuple(mono[p] for p in positions)
        return (sum(mono), tuple(-mono[p] for p in reversed(positions)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Sign of ``a - b`` in this order."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def max(self, monos: Iterable[Monomial]) -> Monomial:
        """Largest monomial."""
        return max(monos, key=self.key)

    def sorted(self, monos: Iterable[Monomial], descending: bool = False) -> List[Monomial]:
        """Monomials ascending, or descending on request."""
        return sorted(monos, key=self.key, reverse=descending)


DEGREVLEX = TermOrder("degrevlex")
LEX = TermOrder("lex")


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """An exact polynomial over the rationals in a fixed, ordered variable tuple."""

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        """Build a polynomial, dropping zero coefficients.

        Args:
            variables: Ordered variable names; must be distinct.
            terms: Map from exponent vectors (one entry per variable) to coefficients.

        """
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise VariableMismatchError(f"duplicate variable names in {variables}")
        clean: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != len(variables):
                raise VariableMismatchError(f"exponent vector {mono} does not match variables {variables}")
            if any(e < 0 for e in mono):
                raise PvalgError(f"negative exponent in {mono}")
            c = as_fraction(coeff)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        self._variables = variables
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Dict[Monomial, Fraction]) -> "Polynomial":
        obj = object.__new__(cls)
        obj._variables = variables
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        """Zero polynomial."""
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], value: Scalar) -> "Polynomial":
        """A constant polynomial."""
        variables = tuple(variables)
        value = as_fraction(value)
        return cls._raw(variables, {(0,) * len(variables): value} if value else {})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "Polynomial":
        """Constant one."""
        return cls.constant(variables, 1)

    @classmethod
    def gen(cls, variables: Sequence[str], name: str) -> "Polynomial":
        """The polynomial consisting of the single variable ``name``."""
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatchError(f"unknown variable '{name}' (variables: {', '.join(variables)})")
        return cls._raw(variables, {tuple(1 if v == name else 0 for v in variables): Fraction(1)})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> Tuple["Polynomial", ...]:
        """One generator per variable."""
        return tuple(cls.gen(variables, name) for name in variables)

    @classmethod
    def monomial(cls, variables: Sequence[str], exponents: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        """A single term ``coeff * x^exponents``."""
        return cls(variables, {tuple(exponents): coeff})

    # -- accessors ----------------------------------------------------------

    @property
    def variables(self) -> Tuple[str, ...]:
        """Ordered variable names."""
        return self._variables

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        """A copy of the exponent-to-coefficient map."""
        return dict(self._terms)

    def items(self):
        """Monomial and coefficient pairs."""
        return self._terms.items()

    def monomials(self) -> List[Monomial]:
        """Monomials with nonzero coefficient."""
        return list(self._terms)

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        """Coefficient of ``mono``, zero when absent."""
        return self._terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        """Coefficient of the empty monomial."""
        return self.coefficient((0,) * len(self._variables))

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self._terms

    def is_constant(self) -> bool:
        """True when no variable occurs."""
        return all(not any(m) for m in self._terms)

    def occurring_variables(self) -> Tuple[str, ...]:
        """Variables with a positive exponent in some term."""
        return tuple(v for i, v in enumerate(self._variables) if any(m[i] for m in self._terms))

    def total_degree(self) -> int:
        """Maximal total degree of a term; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, names: Iterable[str]) -> int:
        """Maximal degree in the given subset of variables; ``-1`` for zero."""
        positions = [self._index(name) for name in names]
        return max((sum(m[p] for p in positions) for m in self._terms), default=-1)

    def _index(self, name: str) -> int:
        try:
            return self._variables.index(name)
        except ValueError:
            raise VariableMismatchError(f"unknown variable '{name}' (variables: {', '.join(self._variables)})") from None

    # -- ordering -----------------------------------------------------------

    def leading_term(self, order: TermOrder = DEGREVLEX) -> Tuple[Monomial, Fraction]:
        """Largest monomial in ``order`` and its coefficient."""
        if not self._terms:
            raise PvalgError("the zero polynomial has no leading term")
        mono = order.max(self._terms)
        return mono, self._terms[mono]

    def leading_monomial(self, order: TermOrder = DEGREVLEX) -> Monomial:
        """Largest monomial in ``order``."""
        return self.leading_term(order)[0]

    def monic(self, order: TermOrder = DEGREVLEX) -> "Polynomial":
        """Scale so the leading coefficient is one."""
        _, lc = self.leading_term(order)
        return self._scaled(1 / lc)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other._variables != self._variables:
                raise VariableMismatchError(f"variables {other._variables} do not match {self._variables}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(self._variables, other)
        return None

    def _scaled(self, c: Fraction) -> "Polynomial":
        if not c:
            return Polynomial.zero(self._variables)
        return Polynomial._raw(self._variables, {m: c * v for m, v in self._terms.items()})

    def __add__(self, other):
        """Sum with a polynomial or scalar."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(self._variables, terms)

    __radd__ = __add__

    def __neg__(self):
        """Negation."""
        return self._scaled(Fraction(-1))

    def __sub__(self, other):
        """Difference."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        """Scalar minus polynomial."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        """Product with a polynomial or scalar."""
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._scaled(Fraction(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial._raw(self._variables, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar."""
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._scaled(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        """Power by repeated squaring."""
        if not isinstance(k, int) or k < 0:
            raise PvalgError("polynomial powers must be non-negative integers")
        result = Polynomial.one(self._variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        """Equal terms over the same variables; scalars compare as constants."""
        if isinstance(other, Polynomial):
            return self._variables == other._variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        """Cached hash of variables and terms."""
        if self._hash is None:
            self._hash = hash((self._variables, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        """False only for zero."""
        return bool(self._terms)

    # -- substitution and calculus ------------------------------------------

    def substitute(
        self,
        assignment: Mapping[str, Union["Polynomial", Scalar]],
        variables: Optional[Sequence[str]] = None,
        partial: bool = False,
    ) -> "Polynomial":
        """Compose with ``assignment`` (variable name -> polynomial or rational).

        The result lives over the common variable set of the assigned
        polynomials, or over ``variables`` when given, or over ``self``'s own
        variables when every assigned value is a scalar. With ``partial=True``
        unassigned variables map to themselves in the target ring.
        """
        targets = {p.variables for p in assignment.values() if isinstance(p, Polynomial)}
        if variables is not None:
            target = tuple(variables)
        elif len(targets) == 1:
            target = next(iter(targets))
        elif not targets:
            target = self._variables
        else:
            raise VariableMismatchError("substituted polynomials do not share one variable set")

        images: List[Polynomial] = []
        for i, name in enumerate(self._variables):
            occurs = any(m[i] for m in self._terms)
            if name in assignment:
                value = assignment[name]
                if isinstance(value, Polynomial):
                    if value.variables != target:
                        raise VariableMismatchError(f"image of '{name}' is over {value.variables}, expected {target}")
                    images.append(value)
                else:
                    images.append(Polynomial.constant(target, value))
            elif not occurs:
                images.append(Polynomial.zero(target))
            elif partial:
                images.append(Polynomial.gen(target, name))
            else:
                raise PvalgError(f"no value assigned to variable '{name}'")

        powers: List[Dict[int, Polynomial]] = [{0: Polynomial.one(target)} for _ in images]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        acc: Dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            term = Polynomial.constant(target, coeff)
            for i, e in enumerate(mono):
                if e:
                    term = term * power(i, e)
            for m, c in term._terms.items():
                acc[m] = acc.get(m, 0) + c
        return Polynomial._raw(target, {m: c for m, c in acc.items() if c})

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Value at a rational point; every occurring variable must be assigned."""
        point = []
        for i, name in enumerate(self._variables):
            if name in values:
                point.append(as_fraction(values[name]))
            elif any(m[i] for m in self._terms):
                raise PvalgError(f"no value assigned to variable '{name}'")
            else:
                point.append(Fraction(0))
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for x, e in zip(point, mono):
                if e:
                    term *= x**e
            total += term
        return total

    def diff(self, name: str) -> "Polynomial":
        """Partial derivative in ``name``."""
        i = self._index(name)
        terms: Dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            e = mono[i]
            if e:
                m = mono[:i] + (e - 1,) + mono[i + 1 :]
                terms[m] = coeff * e
        return Polynomial._raw(self._variables, terms)

    def embed(self, variables: Sequence[str]) -> "Polynomial":
        """Re-express over another variable tuple containing every occurring variable."""
        variables = tuple(variables)
        if variables == self._variables:
            return self
        index = {name: i for i, name in enumerate(variables)}
        for name in self.occurring_variables():
            if name not in index:
                raise VariableMismatchError(f"cannot embed: variable '{name}' missing from {variables}")
        terms: Dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            new = [0] * len(variables)
            for name, e in zip(self._variables, mono):
                if e:
                    new[index[name]] = e
            terms[tuple(new)] = coeff
        return Polynomial._raw(variables, terms)

    def rename(self, mapping: Mapping[str, str]) -> "Polynomial":
        """Rename variables in place; positions and exponents are unchanged."""
        return Polynomial._raw(tuple(mapping.get(v, v) for v in self._variables), dict(self._terms))

    def coefficients_in(self, names: Sequence[str]) -> Dict[Monomial, "Polynomial"]:
        """Split as ``sum(coeff_m * m)`` with ``m`` a monomial in ``names``.

        Coefficients are polynomials in the remaining variables.
        """
        positions = [self._index(name) for name in names]
        rest = [i for i in range(len(self._variables)) if i not in positions]
        rest_vars = tuple(self._variables[i] for i in rest)
        grouped: Dict[Monomial, Dict[Monomial, Fraction]] = {}
        for mono, coeff in self._terms.items():
            key = tuple(mono[p] for p in positions)
            grouped.setdefault(key, {})[tuple(mono[i] for i in rest)] = coeff
        return {key: Polynomial._raw(rest_vars, terms) for key, terms in grouped.items()}

    # -- sympy bridge -------------------------------------------------------

    def to_sympy(self, symbols: Optional[Mapping[str, sp.Symbol]] = None) -> sp.Expr:
        """Sympy expression, optionally over given symbols."""
        symbols = symbols or {}
        syms = [symbols.get(name) or sp.Symbol(name) for name in self._variables]
        expr = sp.Integer(0)
        for mono, coeff in self._terms.items():
            term = sp.Rational(coeff.numerator, coeff.denominator)
            for s, e in zip(syms, mono):
                if e:
                    term *= s**e
            expr += term
        return expr

    @classmethod
    def from_sympy(cls, expr: sp.Expr, variables: Sequence[str], symbols: Optional[Mapping[str, sp.Symbol]] = None) -> "Polynomial":
        """Expand ``expr`` as a polynomial over ``variables``."""
        symbols = symbols or {}
        syms = [symbols.get(name) or sp.Symbol(name) for name in variables]
        if not syms:
            return cls.constant(variables, as_fraction(sp.sympify(expr)))
        poly = sp.Poly(sp.expand(expr), *syms, domain="QQ")
        return cls(variables, {mono: as_fraction(coeff) for mono, coeff in poly.terms()})

    # -- text ---------------------------------------------------------------

    def to_text(self, style: str = "starred") -> str:
        """Render as text.

        ``starred`` writes ``3/2*x1^2*x2``; ``compact`` writes ``3/2x1^2x2``.
        Terms appear in descending lexicographic order of the declared variables.
        """
        if style not in ("starred", "compact"):
            raise ValueError("style must be 'starred' or 'compact'")
        if not self._terms:
            return "0"
        joiner = "*" if style == "starred" else ""
        pieces = []
        for mono in sorted(self._terms, reverse=True):
            coeff = self._terms[mono]
            factors = []
            for name, e in zip(self._variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = joiner.join(factors)
            magnitude = abs(coeff)
            if not body:
                text = format_rational(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{format_rational(magnitude)}{joiner}{body}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += sign + text
        return out

    def __str__(self):
        """Same as :meth:`to_text`."""
        return self.to_text()

    def __repr__(self):
        """Text and variables."""
        return f"Polynomial({self.to_text()!r}, variables={list(self._variables)!r})"


# ---------------------------------------------------------------------------
# Operation-style helpers
# ---------------------------------------------------------------------------


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Apply ``add``, ``sub`` or ``mul``; both operands must share variables."""
    if a.variables != b.variables:
        raise VariableMismatchError(f"variables {a.variables} do not match {b.variables}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"op must be add, sub or mul (got '{op}')")


def substitute(p: Polynomial, assignment: Mapping[str, Union[Polynomial, Scalar]]) -> Polynomial:
    """Function form of :meth:`Polynomial.substitute`."""
    return p.substitute(assignment)


def leading_term(p: Polynomial, order: TermOrder = DEGREVLEX) -> Tuple[Monomial, Fraction]:
    """Function form of :meth:`Polynomial.leading_term`."""
    return p.leading_term(order)
