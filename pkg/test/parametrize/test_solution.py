import pytest
from opgp.groebner import column_module_equal
from opgp.orealg import OperatorMatrix, RingSpec, mat_mul
from opgp.parametrize import parametrize, verify_parametrization
from opgp.exceptions import DimensionMismatchError


@pytest.fixture
def ring():
    return RingSpec.weyl(["x", "y", "z"])


@pytest.fixture
def sphere_system(ring):
    """Divergence-free fields tangent to spheres around the origin."""
    return OperatorMatrix.parse([["x", "y", "z"], ["Dx", "Dy", "Dz"]], ring)


@pytest.fixture
def rotations(ring):
    return OperatorMatrix.parse([["-z*Dy + y*Dz"], ["z*Dx - x*Dz"], ["-y*Dx + x*Dy"]], ring)


class TestParametrize:
    """Tests for parametrizations of solution sets."""

    def test_tangent_divergence_free_fields(self, sphere_system, rotations):
        result = parametrize(sphere_system)
        assert mat_mul(sphere_system, result.B).is_zero()
        assert column_module_equal(result.B, rotations)
        assert result.controllable

    def test_verify_known_parametrization(self, sphere_system, rotations):
        report = verify_parametrization(sphere_system, rotations)
        assert report.product_zero
        assert report.residue_a.is_empty
        assert report.residue_aprime.is_empty
        assert report.passed

    def test_plane_divergence(self):
        ring = RingSpec.weyl(["x", "y"])
        result = parametrize(OperatorMatrix.parse([["Dx", "Dy"]], ring))
        assert column_module_equal(result.B, OperatorMatrix.parse([["Dy"], ["-Dx"]], ring))
        assert result.controllable

    def test_constant_functions_are_not_parametrizable(self):
        ring = RingSpec.weyl(["x"])
        result = parametrize(OperatorMatrix.parse([["Dx"]], ring))
        assert result.B.shape == (1, 0)
        assert not result.controllable
        assert result.witness.rows == 1

    def test_multiplication_operator_has_no_solutions(self):
        ring = RingSpec.weyl(["x"])
        result = parametrize(OperatorMatrix.parse([["x"]], ring))
        assert result.B.shape == (1, 0)
        assert result.Aprime == OperatorMatrix.identity(ring, 1)
        assert not result.controllable

    def test_zero_system_is_parametrized_by_identity(self):
        ring = RingSpec.weyl(["x", "y"])
        result = parametrize(OperatorMatrix.zeros(ring, 1, 2))
        assert column_module_equal(result.B, OperatorMatrix.identity(ring, 2))
        assert result.controllable

    def test_wrong_parametrization_is_reported(self, sphere_system, ring):
        wrong = OperatorMatrix.parse([["Dy"], ["-Dx"], ["0"]], ring)
        report = verify_parametrization(sphere_system, wrong)
        assert not report.product_zero
        assert not report.passed

    def test_shapes_must_conform(self, sphere_system, ring):
        with pytest.raises(DimensionMismatchError):
            verify_parametrization(sphere_system, OperatorMatrix.parse([["1"]], ring))
