import pytest
from pydantic import ValidationError

from pvalg import table_algebra
from pvalg.algebras import algebra_from_model, algebra_to_model
from pvalg.models import ActionModel, AlgebraModel, MatrixGroupModel, RepModel, SweepRow


class TestAlgebraModel:
    def test_dump_uses_rational_strings(self):
        model = algebra_to_model(table_algebra(2))
        data = model.model_dump()
        assert data["unit"] == ["1", "0"]
        assert data["structure"][1][1] == ["0", "0"]
        assert data["basis"] == ["1", "x1"]

    def test_json_round_trip(self):
        model = algebra_to_model(table_algebra(6))
        again = AlgebraModel.model_validate_json(model.model_dump_json())
        assert algebra_from_model(again) == table_algebra(6)

    def test_rejects_bad_rationals(self):
        with pytest.raises(ValidationError, match="zero denominator"):
            AlgebraModel(dim=1, basis=["1"], unit=["1/0"], structure=[[["1"]]])
        with pytest.raises(ValidationError):
            AlgebraModel(dim=1, basis=["1"], unit=["0.5"], structure=[[["1"]]])

    def test_rejects_bad_shapes(self):
        with pytest.raises(ValidationError, match="2x2x2"):
            AlgebraModel(dim=2, basis=["1", "x"], unit=["1", "0"], structure=[[["1", "0"]]])
        with pytest.raises(ValidationError, match="2 entries"):
            AlgebraModel(dim=2, basis=["1"], unit=["1", "0"], structure=[[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]])


class TestRepModel:
    def test_layout_must_partition(self):
        with pytest.raises(ValidationError, match="partition"):
            RepModel(n=2, torus_params=["l1"], additive_params=["a1"], entries=[["l1", "0"], ["l1*a1", "l1"]], layout=[[0, 0]])

    def test_one_block_per_torus(self):
        with pytest.raises(ValidationError, match="one block per torus"):
            RepModel(n=2, torus_params=["l1", "l2"], additive_params=[], entries=[["l1", "0"], ["0", "l2"]], layout=[[0, 1]])

    def test_square_entries(self):
        with pytest.raises(ValidationError, match="2x2"):
            RepModel(n=2, torus_params=["l1"], additive_params=[], entries=[["l1", "0"]], layout=[[0, 1]])


def test_matrix_group_model_checks_rationals():
    MatrixGroupModel(n=1, lie_basis=[[["1"]]], base_point=["-3/4"])
    with pytest.raises(ValidationError):
        MatrixGroupModel(n=1, lie_basis=[[["x"]]])


def test_action_model_component_count():
    with pytest.raises(ValidationError, match="one polynomial per space coordinate"):
        ActionModel(r=1, s=0, n=2, components=["l1*x1"])


def test_sweep_row_defaults():
    row = SweepRow(a=11, b=13, dim_a=5, dim_b=5, result="inconclusive")
    assert row.invariant is None and row.left is None
