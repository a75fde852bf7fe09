import pytest

from pvalg import table_algebra
from pvalg.core.config import RunConfig
from pvalg.core.errors import DimensionMismatchError, NonCommutativeCommutantError, NotCyclicError
from pvalg.prehom import (
    MatrixGroupInput,
    associative_hull,
    check_commutative,
    commutant,
    embed_cyclic,
    find_open_orbit_point,
    group_from_model,
    group_to_model,
    infinitesimal_orbit_rank,
    is_cyclic,
    is_diagonally_normalized,
    is_faithful,
    is_prehomogeneous_at,
    polex_group,
    reconstruct_algebra,
    regular_rep,
    translations_group,
)
from pvalg.hassett import lie_algebra, matrix_rep
from pvalg.presentations import load_table


class TestRegularRepresentation:
    @pytest.fixture
    def inp(self):
        return regular_rep(table_algebra(20))

    def test_checks(self, inp):
        assert check_commutative(inp)
        assert is_faithful(inp)
        assert is_prehomogeneous_at(inp)
        assert is_cyclic(inp)

    def test_orbit_rank_drops_on_the_radical(self, inp):
        a = table_algebra(20)
        assert infinitesimal_orbit_rank(inp, a.unit) == 6
        assert infinitesimal_orbit_rank(inp, a.element({"x1": 1})) < 6
        assert infinitesimal_orbit_rank(inp, a.zero()) == 0

    def test_commutant_is_the_algebra(self, inp):
        assert len(commutant(inp)) == 6
        assert len(associative_hull(inp)) == 6

    def test_reconstruction_returns_the_structure(self, inp):
        a = table_algebra(20)
        result = reconstruct_algebra(inp)
        assert result.algebra.structure == a.structure
        assert result.algebra.unit == a.unit
        assert result.witness == a.unit
        assert result.operators == a.operators

    def test_embed_cyclic(self, inp):
        a = table_algebra(20)
        emb = embed_cyclic(inp)
        assert emb.hull_dim == 6
        assert emb.algebra.structure == a.structure
        assert emb.lie_images == tuple(a.basis_vector(i) for i in range(6))


def test_reconstruction_from_a_generic_point():
    a = table_algebra(3)
    inp = MatrixGroupInput(3, a.operators)
    result = reconstruct_algebra(inp, config=RunConfig(seed=7))
    assert result.witness[0] != 0
    assert result.algebra.unit == result.witness
    assert result.algebra.dim == 3


def test_not_cyclic_point():
    inp = regular_rep(table_algebra(2))
    assert not is_cyclic(inp, (0, 1))
    with pytest.raises(NotCyclicError) as excinfo:
        reconstruct_algebra(inp, (0, 1))
    assert excinfo.value.determinant == 0


class TestPolex:
    def test_commutant_too_large(self):
        inp = polex_group(2)
        assert len(commutant(inp)) == 5
        with pytest.raises(DimensionMismatchError, match="dimension 5"):
            reconstruct_algebra(inp, (1, 1, 1, 1))

    def test_hull_is_not_cyclic(self):
        with pytest.raises(NotCyclicError):
            embed_cyclic(polex_group(2), (1, 1, 1, 1))

    def test_more_parameters_than_dimension(self):
        inp = polex_group(2)
        assert len(inp.lie_basis) == 5
        assert not is_prehomogeneous_at(inp, (1, 1, 1, 1))
        assert infinitesimal_orbit_rank(inp, (1, 1, 1, 1)) == 3

    def test_rejects_zero(self):
        with pytest.raises(DimensionMismatchError):
            polex_group(0)


def test_noncommutative_commutant():
    # the scalars on K^4 have all of M_4 as commutant
    inp = MatrixGroupInput(4, (((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),))
    with pytest.raises(DimensionMismatchError):
        reconstruct_algebra(inp, (1, 0, 0, 0))
    hull_input = MatrixGroupInput(2, (((0, 1), (1, 0)), ((1, 0), (0, 0))))
    assert not check_commutative(hull_input)
    with pytest.raises(NonCommutativeCommutantError):
        embed_cyclic(hull_input, (1, 0))


def test_translations_have_no_open_orbit():
    inp = translations_group(2)
    assert inp.base_point == (0, 0, 1)
    assert infinitesimal_orbit_rank(inp) == 2
    search = find_open_orbit_point(inp, RunConfig(retries=3))
    assert not search.open
    assert search.rank <= 2
    assert search.attempts == 3


def test_open_orbit_search_is_seeded():
    inp = regular_rep(table_algebra(6))
    first = find_open_orbit_point(inp, RunConfig(seed=11))
    second = find_open_orbit_point(inp, RunConfig(seed=11))
    assert first == second


def test_point_shape_is_checked():
    inp = regular_rep(table_algebra(2))
    with pytest.raises(DimensionMismatchError):
        infinitesimal_orbit_rank(inp, (1, 0, 0))
    with pytest.raises(DimensionMismatchError, match="no point"):
        infinitesimal_orbit_rank(MatrixGroupInput(2, inp.lie_basis))


def test_matrix_shape_is_checked():
    with pytest.raises(DimensionMismatchError):
        MatrixGroupInput(2, (((1, 0, 0), (0, 1, 0)),))


def test_model_keeps_the_group():
    inp = regular_rep(table_algebra(4))
    assert group_from_model(group_to_model(inp)) == inp


class TestDiagonalNormalization:
    def test_dual_numbers(self):
        assert is_diagonally_normalized(regular_rep(table_algebra(2)))

    def test_chain_of_length_three(self):
        assert not is_diagonally_normalized(regular_rep(table_algebra(3)))

    @pytest.mark.slow
    def test_matches_square_zero_entries(self, golden):
        found = [e.index for e in load_table() if is_diagonally_normalized(regular_rep(table_algebra(e.index)))]
        assert found == golden("square_zero_entries.json")


@pytest.mark.slow
@pytest.mark.parametrize("k", range(1, 43))
def test_table_round_trip(k):
    a = table_algebra(k)
    inp = lie_algebra(matrix_rep(a))
    assert inp.base_point == a.unit
    assert len(inp.lie_basis) == a.dim
    assert infinitesimal_orbit_rank(inp) == a.dim
    assert len(commutant(inp)) == a.dim
    result = reconstruct_algebra(inp)
    assert result.witness == a.unit
    assert result.algebra.structure == a.structure
