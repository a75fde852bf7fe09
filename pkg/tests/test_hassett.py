"""The module ``G(A)`` acting on ``A``: exp/log, the parameterized matrix and its checks."""

from fractions import Fraction

import numpy as np
import pytest

from pvalg import algebra, table_algebra
from pvalg.algebras import direct_sum, from_structure
from pvalg.core.errors import InvalidBasisError, NotNilpotentError, NotUnipotentError, ParameterError
from pvalg.hassett import (
    det_rep,
    evaluate_rep,
    evaluated_latex,
    exp_element,
    expected_determinant,
    identity_values,
    lie_algebra,
    log_element,
    matrix_rep,
    override_basis,
    rep_from_model,
    rep_to_model,
    to_latex,
    verify_homomorphism,
)
from pvalg.polyring import Polynomial
from pvalg.prehom import reconstruct_algebra

ENTRY_20_BASIS = ["1", "x1", "x2", "x1^2", "x2^2", "x1^3"]


class TestExpLog:
    def test_exp_on_dual_numbers(self):
        assert exp_element(table_algebra(2), (0, 3)) == (1, 3)

    def test_exp_on_chain(self):
        a = table_algebra(3)
        assert exp_element(a, (0, 1, 0)) == (1, 1, Fraction(1, 2))
        assert log_element(a, (1, 1, Fraction(1, 2))) == (0, 1, 0)

    def test_log_inverts_exp(self):
        a = table_algebra(20)
        x = (0, 2, -1, Fraction(1, 3), 0, 5)
        assert log_element(a, exp_element(a, x)) == x

    def test_exp_needs_nilpotent(self):
        with pytest.raises(NotNilpotentError):
            exp_element(table_algebra(2), (1, 0))

    def test_log_needs_unipotent(self):
        with pytest.raises(NotUnipotentError):
            log_element(table_algebra(2), (2, 0))


class TestDualNumbers:
    @pytest.fixture
    def rep(self):
        return matrix_rep(table_algebra(2))

    def test_symbolic_matrix(self, rep):
        l1, a1 = Polynomial.gens(rep.variables)
        assert rep.torus_params == ("l1",)
        assert rep.additive_params == ("a1",)
        assert rep.entries == ((l1, 0), (l1 * a1, l1))
        assert rep.layout == ((0, 1),)
        assert rep.unit == (1, 0)
        assert rep.basis_labels == ("1", "x1")

    def test_evaluate(self, rep):
        assert evaluate_rep(rep, {"l1": 2, "a1": 3}) == ((2, 0), (6, 2))
        assert evaluate_rep(rep, identity_values(rep)) == ((1, 0), (0, 1))

    @pytest.mark.parametrize(
        "values, message",
        [
            ({"l1": 2}, "missing"),
            ({"l1": 2, "a1": 1, "z": 0}, "unknown"),
            ({"l1": 0, "a1": 1}, "non-zero"),
        ],
    )
    def test_evaluate_errors(self, rep, values, message):
        with pytest.raises(ParameterError, match=message):
            evaluate_rep(rep, values)

    def test_latex(self, rep):
        latex = to_latex(rep)
        assert latex.startswith("\\begin{pmatrix}")
        assert latex.endswith("\\end{pmatrix}")
        assert "\\lambda" in latex and "\\alpha_{1}" in latex
        assert "l1" not in latex

    def test_evaluated_latex(self, rep):
        m = evaluate_rep(rep, {"l1": 2, "a1": "1/2"})
        assert evaluated_latex(m) == "\\begin{pmatrix}\n  2 & 0 \\\\\n  1 & 2\n\\end{pmatrix}"

    def test_lie_algebra_reconstructs_the_algebra(self, rep):
        inp = lie_algebra(rep)
        assert inp.base_point == (1, 0)
        assert inp.lie_basis == (((1, 0), (0, 1)), ((0, 0), (1, 0)))
        result = reconstruct_algebra(inp)
        assert result.algebra.structure == (((1, 0), (0, 1)), ((0, 1), (0, 0)))


class TestEntryTwentyOverride:
    """``K[x1,x2]/(x1x2, x1^3-x2^3)`` in the basis 1, x1, x2, x1^2, x2^2, x1^3.

    With ``u = exp(a1 x1 + a2 x2 + a3 x1^2 + a4 x2^2 + a5 x1^3)`` the column of
    ``b`` is ``l1 * u * b``; ``x2^3 = x1^3`` and ``x1 x2 = 0`` leave three
    non-linear coefficients.
    """

    @pytest.fixture
    def rep(self):
        return matrix_rep(table_algebra(20), ENTRY_20_BASIS)

    def test_shape(self, rep):
        assert rep.torus_params == ("l1",)
        assert rep.additive_params == ("a1", "a2", "a3", "a4", "a5")
        assert rep.basis_labels == tuple(ENTRY_20_BASIS)
        assert rep.unit == (1, 0, 0, 0, 0, 0)

    def test_entries(self, rep):
        l1, a1, a2, a3, a4, a5 = Polynomial.gens(rep.variables)
        c3 = a3 + a1**2 / 2
        c4 = a4 + a2**2 / 2
        c5 = a5 + a1 * a3 + a2 * a4 + (a1**3 + a2**3) / 6
        columns = [
            (1, a1, a2, c3, c4, c5),
            (0, 1, 0, a1, 0, c3),
            (0, 0, 1, 0, a2, c4),
            (0, 0, 0, 1, 0, a1),
            (0, 0, 0, 0, 1, a2),
            (0, 0, 0, 0, 0, 1),
        ]
        for j, col in enumerate(columns):
            for i, value in enumerate(col):
                assert rep.entries[i][j] == l1 * value, (i, j)

    def test_basis_vectors_in_source_coordinates(self, rep):
        a = table_algebra(20)
        labels = a.basis_labels
        assert rep.basis[1] == a.basis_vector(labels.index("x1"))
        # x1^3 reduces to x2^3 in the standard-monomial basis
        assert rep.basis[5] == a.basis_vector(labels.index("x2^3"))

    def test_checks(self, rep):
        assert verify_homomorphism(rep)
        assert det_rep(rep) == expected_determinant(rep)
        assert det_rep(rep) == Polynomial.gen(rep.variables, "l1") ** 6


class TestOverrideErrors:
    def test_wrong_count(self):
        with pytest.raises(InvalidBasisError, match="dimension 6"):
            override_basis(table_algebra(20), ENTRY_20_BASIS[:5])

    def test_dependent(self):
        with pytest.raises(InvalidBasisError, match="not a basis"):
            override_basis(table_algebra(20), ["1", "x1", "x2", "x1^2", "x2^2", "x1*x2"])

    def test_unreadable(self):
        with pytest.raises(InvalidBasisError, match="cannot read"):
            override_basis(table_algebra(2), ["1", "x1^^2"])

    def test_needs_presentation(self):
        a = from_structure([[(1, 0), (0, 1)], [(0, 1), (0, 0)]], (1, 0))
        with pytest.raises(InvalidBasisError, match="presentation"):
            override_basis(a, ["1", "x1"])

    def test_polynomial_basis_elements(self):
        b, columns = override_basis(table_algebra(3), ["1", "x1 + x1^2", "x1^2"])
        assert columns == ((1, 0, 0), (0, 1, 0), (0, 1, 1))
        # (x1 + x1^2)^2 = x1^2
        assert b.multiply((0, 1, 0), (0, 1, 0)) == (0, 0, 1)


class TestSplitAlgebras:
    def test_two_tori(self):
        rep = matrix_rep(algebra("K[x1]/(x1^2-1)"))
        l1, l2 = Polynomial.gens(rep.variables)
        assert rep.additive_params == ()
        assert rep.entries == ((l1, 0), (0, l2))
        assert set(rep.basis) == {(Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2), Fraction(-1, 2))}

    def test_mixed_blocks(self):
        a = algebra("K[x1]/(x1^3-x1^2)")
        rep = matrix_rep(a)
        assert sorted(len(block) for block in rep.layout) == [1, 2]
        assert rep.parameter_count == 3
        assert verify_homomorphism(rep)
        assert det_rep(rep) == expected_determinant(rep)


@pytest.mark.parametrize("k", range(1, 43))
def test_homomorphism_on_table_entries(k):
    rep = matrix_rep(table_algebra(k))
    assert verify_homomorphism(rep)
    assert det_rep(rep) == Polynomial.gen(rep.variables, "l1") ** rep.n


@pytest.mark.parametrize("seed", range(5))
def test_homomorphism_on_random_direct_sums(seed):
    rng = np.random.default_rng(seed)
    picks = [int(k) for k in rng.integers(1, 9, size=2)]
    rep = matrix_rep(direct_sum([table_algebra(k) for k in picks]))
    assert rep.torus_params == ("l1", "l2")
    assert verify_homomorphism(rep)
    assert det_rep(rep) == expected_determinant(rep)
    dims = sorted(len(block) for block in rep.layout)
    assert sorted([table_algebra(k).dim for k in picks]) == dims
    assert expected_determinant(rep).total_degree() == rep.n


def test_broken_representation_fails_the_check():
    rep = matrix_rep(table_algebra(2))
    model = rep_to_model(rep).model_copy(update={"entries": [["l1", "0"], ["l1*a1^2", "l1"]]})
    assert not verify_homomorphism(rep_from_model(model))


def test_model_keeps_the_matrix():
    rep = matrix_rep(table_algebra(20), ENTRY_20_BASIS)
    back = rep_from_model(rep_to_model(rep))
    assert back.entries == rep.entries
    assert back.unit == rep.unit
    assert back.layout == rep.layout
    assert back.basis_labels == rep.basis_labels
