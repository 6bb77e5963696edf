from fractions import Fraction

import pytest
from opgp.groebner import column_module_equal, row_module_equal
from opgp.orealg import OperatorMatrix, RingSpec, mat_mul, parse_operator
from opgp.parametrize import arrange_columns, boundary_param, intersect, normalize_columns
from opgp.exceptions import BoundaryGeneratorError, DimensionMismatchError, RingMismatchError


@pytest.fixture
def ring():
    return RingSpec.weyl(["x", "y", "z"])


@pytest.fixture
def rotations(ring):
    return OperatorMatrix.parse([["-z*Dy + y*Dz"], ["z*Dx - x*Dz"], ["-y*Dx + x*Dy"]], ring)


class TestBoundaryParam:
    """Tests for parametrizations of functions vanishing on varieties."""

    def test_block_diagonal(self, ring):
        m = boundary_param([["z"], ["x", "y"]], ring)
        assert m.to_lists() == [["1*z", "0", "0"], ["0", "1*x", "1*y"]]

    def test_partials_are_rejected(self, ring):
        with pytest.raises(BoundaryGeneratorError):
            boundary_param([["Dz"]], ring)


class TestIntersect:
    """Tests for intersections of two parametrizations."""

    def test_tangent_fields_vanishing_on_equator(self, ring, rotations):
        result = intersect(rotations, boundary_param([["z"], ["z"], ["z"]], ring))
        assert mat_mul(result.B, result.C).is_zero()
        assert mat_mul(rotations, result.C1) == -mat_mul(result.B.take_columns([1, 2, 3]), result.C2)
        squared = mat_mul(rotations, OperatorMatrix.parse([["z^2"]], ring))
        assert column_module_equal(result.P, squared)
        div = OperatorMatrix.parse([["x", "y", "z"], ["Dx", "Dy", "Dz"]], ring)
        assert mat_mul(div, result.P).is_zero()

    def test_equator_extra_relation(self, ring, rotations):
        result = intersect(rotations, boundary_param([["z"], ["z"], ["z"]], ring))
        assert result.extra_relations.rows > 0
        expected = OperatorMatrix.parse([["0", "x", "y", "z"]], ring)
        assert row_module_equal(result.extra_relations.vstack(result.B), expected.vstack(result.B))

    def test_curl_free_tangent_fields(self, ring, rotations):
        curl = OperatorMatrix.parse([["0", "Dz", "-Dy"], ["-Dz", "0", "Dx"], ["Dy", "-Dx", "0"]], ring)
        tangent = OperatorMatrix.parse([["0", "z", "-y"], ["-z", "0", "x"], ["y", "-x", "0"]], ring)
        result = intersect(curl, tangent)
        assert column_module_equal(result.P, rotations)

    def test_square_walls(self):
        ring = RingSpec.weyl(["x", "y"])
        b1 = OperatorMatrix.parse([["Dy"], ["-Dx"]], ring)
        walls = boundary_param([["x*(x-1)"], ["y*(y-1)"]], ring)
        result = intersect(b1, walls)
        c = OperatorMatrix.parse([["x^2*y^2 - x^2*y - x*y^2 + x*y"]], ring)
        assert column_module_equal(result.P, mat_mul(b1, c))

    def test_intersection_with_identity(self):
        ring = RingSpec.weyl(["x", "y"])
        b = OperatorMatrix.parse([["Dy"], ["-Dx"]], ring)
        result = intersect(b, OperatorMatrix.identity(ring, 2))
        assert column_module_equal(result.P, b)
        assert result.extra_relations.rows == 0

    def test_mismatches(self, ring, rotations):
        with pytest.raises(DimensionMismatchError):
            intersect(rotations, OperatorMatrix.parse([["x"]], ring))
        other = RingSpec.weyl(["x", "y", "z"], ["dx", "dy", "dz"])
        with pytest.raises(RingMismatchError):
            intersect(rotations, OperatorMatrix.parse([["x"], ["y"], ["z"]], other))


class TestNormalize:
    """Tests for canonical column scaling and arrangement."""

    def test_normalize_columns(self, ring):
        m = OperatorMatrix.parse([["2*x", "0", "-x"], ["4/3*y", "0", "0"]], ring)
        normalized, kept, scales = normalize_columns(m)
        assert kept == [0, 2]
        assert scales == [Fraction(3, 2), Fraction(-1)]
        assert normalized.to_lists() == [["3*x", "1*x"], ["2*y", "0"]]

    def test_arrange_columns(self, ring):
        m = OperatorMatrix.parse([["x", "y"]], ring)
        assert arrange_columns(m, [2, -1])[0, 1] == parse_operator("-x", ring)
        assert arrange_columns(m, [2, -1])[0, 0] == parse_operator("y", ring)
        for bad in ([0], [3]):
            with pytest.raises(DimensionMismatchError):
                arrange_columns(m, bad)
