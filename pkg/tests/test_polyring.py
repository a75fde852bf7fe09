"""Exact multivariate polynomials: arithmetic, substitution, calculus and text forms."""

from fractions import Fraction

import pytest

from pvalg.core.errors import VariableMismatchError
from pvalg.polyring import DEGREVLEX, LEX, Polynomial, TermOrder, mono_divides, mono_lcm

V = ("x1", "x2")
x1, x2 = Polynomial.gens(V)


class TestArithmetic:
    def test_ring_laws(self):
        p = x1 + 2 * x2
        q = x1 - x2
        assert p * q == q * p
        assert (p + q) * p == p * p + q * p
        assert p - p == 0
        assert (p * q).total_degree() == 2

    def test_scalar_interaction(self):
        assert (x1 / 2) * 2 == x1
        assert 3 - x1 == -(x1 - 3)
        assert Polynomial.constant(V, 5) == 5
        assert (x1**0) == 1

    def test_zero_coefficients_dropped(self):
        p = Polynomial(V, {(1, 0): 1, (0, 1): 0})
        assert p.monomials() == [(1, 0)]
        assert not Polynomial.zero(V)

    def test_variable_sets_must_match(self):
        y = Polynomial.gen(("y",), "y")
        with pytest.raises(VariableMismatchError):
            x1 + y

    def test_hash_consistent_with_equality(self):
        assert len({x1 * x2, x2 * x1, x1}) == 2


class TestTermOrders:
    def test_degrevlex_prefers_degree_then_last_variable_smallest(self):
        assert DEGREVLEX.compare((0, 3), (1, 1)) > 0
        assert DEGREVLEX.compare((2, 0), (1, 1)) > 0
        assert DEGREVLEX.max([(1, 1), (2, 0), (0, 2)]) == (2, 0)

    def test_lex(self):
        assert LEX.compare((1, 0), (0, 5)) > 0

    def test_leading_term(self):
        p = x1**3 - x2**3 + x1 * x2
        assert p.leading_term() == ((3, 0), Fraction(1))
        assert (2 * p).monic() == p

    def test_from_names_precedence(self):
        order = TermOrder.from_names("lex", V, ["x2", "x1"])
        assert order.compare((0, 1), (5, 0)) > 0


def test_monomial_helpers():
    assert mono_divides((1, 0), (2, 1))
    assert not mono_divides((0, 2), (2, 1))
    assert mono_lcm((2, 0), (1, 3)) == (2, 3)


class TestSubstitution:
    def test_substitute_polynomials(self):
        p = x1**2 + x2
        q = p.substitute({"x1": x1 + x2, "x2": x1})
        assert q == x1**2 + 2 * x1 * x2 + x2**2 + x1

    def test_partial_substitution_keeps_unassigned(self):
        p = x1 * x2
        assert p.substitute({"x1": 3}, partial=True) == 3 * x2

    def test_evaluate(self):
        assert (x1**2 - x2 / 2).evaluate({"x1": 3, "x2": 4}) == Fraction(7)

    def test_diff(self):
        p = x1**3 * x2 + x2
        assert p.diff("x1") == 3 * x1**2 * x2
        assert p.diff("x2") == x1**3 + 1

    def test_embed_and_rename(self):
        big = ("x1", "x2", "y")
        assert x1.embed(big) == Polynomial.gen(big, "x1")
        assert (x1 * x2).rename({"x1": "u", "x2": "w"}).variables == ("u", "w")
        with pytest.raises(VariableMismatchError):
            x2.embed(("x1",))

    def test_coefficients_in(self):
        variables = ("l1", "a1", "x1")
        l1, a1, y = Polynomial.gens(variables)
        p = l1 * y + l1 * a1 * y**2 + a1
        split = p.coefficients_in(("l1", "a1"))
        assert split[(1, 0)] == Polynomial.gen(("x1",), "x1")
        assert split[(1, 1)] == Polynomial.gen(("x1",), "x1") ** 2
        assert split[(0, 1)] == 1


class TestText:
    def test_starred_and_compact(self):
        p = Fraction(3, 2) * x1**2 * x2 - x2**3
        assert p.to_text() == "3/2*x1^2*x2-x2^3"
        assert p.to_text("compact") == "3/2x1^2x2-x2^3"

    def test_lex_descending_matches_table_notation(self):
        assert (x1**3 - x2**3).to_text("compact") == "x1^3-x2^3"
        assert (x1 * x2 - x1**2).to_text("compact") == "-x1^2+x1x2"

    def test_zero(self):
        assert Polynomial.zero(V).to_text() == "0"


def test_sympy_round_trip():
    p = Fraction(1, 6) * x1**3 - 2 * x1 * x2 + 5
    assert Polynomial.from_sympy(p.to_sympy(), V) == p
