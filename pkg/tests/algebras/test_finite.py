from fractions import Fraction

import numpy as np
import pytest

from pvalg import algebra, table_algebra
from pvalg.algebras import (
    algebra_from_model,
    algebra_to_model,
    change_basis,
    direct_sum,
    from_structure,
    mult_operator,
    permute_basis,
    try_inverse,
    unit_hyperplanes,
    verify_axioms,
)
from pvalg.algebras.classify import chain_algebra, chain_direct_sum, residue_split_algebra
from pvalg.core import linalg
from pvalg.core.errors import AxiomViolationError, DimensionMismatchError, InvalidBasisError, PvalgError
from pvalg.models import AlgebraModel


class TestFromQuotient:
    def test_dual_numbers(self):
        a = table_algebra(2)
        assert a.dim == 2
        assert a.basis_labels == ("1", "x1")
        assert a.unit == (1, 0)
        assert mult_operator(a, a.basis_vector(1)) == ((0, 0), (1, 0))

    def test_entry_twenty_products(self):
        a = table_algebra(20)
        x1 = a.element({"x1": 1})
        x2 = a.element({"x2": 1})
        assert a.multiply(x1, x2) == a.zero()
        assert a.power(x1, 3) == a.element({"x2^3": 1})
        assert a.power(x2, 4) == a.zero()
        assert a.power(x1, 0) == a.one()

    def test_chain_matches_table(self):
        assert chain_algebra(3) == table_algebra(3)

    def test_keeps_groebner_data(self):
        a = algebra("K[x1,x2]/(x1^2, x2^2)")
        assert a.dim == 4
        assert a.presentation is not None
        assert len(a.quotient_basis) == 4

    def test_unit_ideal_is_rejected(self):
        with pytest.raises(PvalgError, match="zero ring"):
            algebra("K[x1]/(x1, x1-1)")


class TestAxioms:
    @pytest.mark.parametrize("k", [1, 2, 8, 20, 39])
    def test_table_entries_satisfy_axioms(self, k):
        assert verify_axioms(table_algebra(k)).ok

    def test_noncommutative_structure(self):
        # b2*b1 = b2 but b1*b2 = 0
        zero, b2 = (0, 0), (0, 1)
        structure = [[(1, 0), zero], [b2, zero]]
        report = verify_axioms(from_structure(structure, (1, 0)))
        assert not report.commutative
        assert not report.ok
        assert any("commutativity" in f for f in report.failures)

    def test_from_model_requires_axioms(self):
        model = AlgebraModel(dim=2, basis=["b1", "b2"], unit=["1", "0"], structure=[[["1", "0"], ["0", "0"]], [["0", "1"], ["0", "0"]]])
        with pytest.raises(AxiomViolationError):
            algebra_from_model(model)

    def test_model_keeps_structure(self):
        a = table_algebra(20)
        b = algebra_from_model(algebra_to_model(a))
        assert b == a
        assert b.presentation is None


class TestShapes:
    def test_bad_unit_length(self):
        with pytest.raises(DimensionMismatchError):
            from_structure([[(1,)]], (1, 0))

    def test_bad_element_length(self):
        a = table_algebra(2)
        with pytest.raises(DimensionMismatchError):
            a.multiply((1, 0), (1, 0, 0))

    def test_unknown_label(self):
        with pytest.raises(PvalgError, match="unknown basis label"):
            table_algebra(2).element({"y": 1})


def test_inverse_of_one_plus_nilpotent():
    a = table_algebra(2)
    assert try_inverse(a, (1, 1)) == (1, -1)
    assert try_inverse(a, (0, 1)) is None


def test_inverse_with_fractions():
    a = table_algebra(3)
    inv = try_inverse(a, (2, 0, 0))
    assert inv == (Fraction(1, 2), 0, 0)


@pytest.mark.parametrize(
    "build",
    [
        lambda: residue_split_algebra([(0, 2), (1, 1)]),
        lambda: chain_direct_sum([2, 1]),
        lambda: algebra("K[x1]/(x1^3-x1)"),
        lambda: direct_sum([table_algebra(4), table_algebra(2)]),
    ],
    ids=["residue-split", "chain-sum", "three-roots", "mixed-sum"],
)
def test_inverse_exists_exactly_off_the_unit_hyperplanes(build):
    a = build()
    forms = unit_hyperplanes(a)
    rng = np.random.default_rng(11)
    samples = [a.zero(), a.unit] + [tuple(int(c) for c in rng.integers(-2, 3, size=a.dim)) for _ in range(40)]
    for x in samples:
        off_hyperplanes = all(linalg.dot(form, linalg.vector(x)) != 0 for form in forms)
        inverse = try_inverse(a, x)
        assert (inverse is not None) == off_hyperplanes, x
        if inverse is not None:
            assert a.multiply(linalg.vector(x), inverse) == a.unit


def test_change_basis_rejects_singular():
    a = table_algebra(2)
    with pytest.raises(InvalidBasisError):
        change_basis(a, ((1, 1), (1, 1)))


def test_permute_basis():
    a = table_algebra(3)
    b = permute_basis(a, [2, 0, 1])
    assert b.basis_labels == ("x1^2", "1", "x1")
    assert b.unit == (0, 1, 0)
    # x1 * x1 = x1^2
    assert b.multiply((0, 0, 1), (0, 0, 1)) == (1, 0, 0)
    assert verify_axioms(b).ok
    with pytest.raises(InvalidBasisError):
        permute_basis(a, [0, 0, 1])


def test_direct_sum():
    s = direct_sum([chain_algebra(1), chain_algebra(2)])
    assert s.dim == 3
    assert s.basis_labels == ("1@A1", "1@A2", "x1@A2")
    assert s.unit == (1, 1, 0)
    assert s.multiply((1, 0, 0), (0, 1, 0)) == s.zero()
    assert verify_axioms(s).ok
