"""Rational scalars: coercion and the ``"p/q"`` text form used in JSON files."""

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a :class:`Fraction`.

    Floats are rejected: nothing in pvalg is allowed to be inexact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    # sympy Rational and friends expose p and q
    p, q = getattr(value, "p", None), getattr(value, "q", None)
    if p is not None and q is not None:
        return Fraction(int(p), int(q))
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` with q positive."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value) -> str:
    """Canonical text of a rational: ``"p"`` for integers, ``"p/q"`` otherwise."""
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
