import random

import pytest
from opgp.groebner import (
    column_module_equal, reduce_matrix, right_nullspace, row_module_equal, syzygy_module, truncated_syzygies,
)
from opgp.orealg import OperatorMatrix, RingSpec, mat_mul
from opgp.exceptions import AlgebraError, DimensionMismatchError


@pytest.fixture
def poly_ring():
    return RingSpec.commutative(["x", "y", "z"])


@pytest.fixture
def weyl():
    return RingSpec.weyl(["x", "y", "z"])


class TestSyzygies:
    """Tests for left syzygies and right nullspaces."""

    def test_koszul_pair(self, poly_ring):
        m = OperatorMatrix.parse([["x"], ["y"]], poly_ring)
        syz = syzygy_module(m)
        assert mat_mul(syz, m).is_zero()
        assert row_module_equal(syz, OperatorMatrix.parse([["y", "-x"]], poly_ring))

    def test_koszul_triple_needs_three_generators(self, poly_ring):
        m = OperatorMatrix.parse([["x"], ["y"], ["z"]], poly_ring)
        syz = syzygy_module(m)
        assert syz.rows == 3
        assert mat_mul(syz, m).is_zero()

    def test_right_nullspace_of_divergence(self, weyl):
        div = OperatorMatrix.parse([["Dx", "Dy", "Dz"]], weyl)
        b = right_nullspace(div)
        assert mat_mul(div, b).is_zero()
        curl_columns = OperatorMatrix.parse([["0", "-Dz", "Dy"], ["Dz", "0", "-Dx"], ["-Dy", "Dx", "0"]], weyl)
        assert column_module_equal(b, curl_columns)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_identity_has_no_syzygies(self, weyl, n):
        assert syzygy_module(OperatorMatrix.identity(weyl, n)).shape == (0, n)

    def test_trivial_nullspace(self, weyl):
        b = right_nullspace(OperatorMatrix.parse([["Dx"]], weyl))
        assert b.shape == (1, 0)

    @pytest.mark.parametrize("degree", [1, 2])
    def test_truncated_syzygies_lie_in_syzygy_module(self, poly_ring, degree):
        m = OperatorMatrix.parse([["x", "y"], ["y", "z"], ["x*z", "y*z"]], poly_ring)
        truncated = truncated_syzygies(m, degree)
        assert truncated.rows > 0
        assert mat_mul(truncated, m).is_zero()
        assert reduce_matrix(truncated, syzygy_module(m)).rows == 0

    def test_truncation_is_commutative_only(self, weyl):
        with pytest.raises(AlgebraError):
            truncated_syzygies(OperatorMatrix.parse([["Dx"]], weyl), 1)


class TestModuleComparison:
    """Tests for row and column module equality."""

    def test_row_modules(self, poly_ring):
        a = OperatorMatrix.parse([["x"], ["y"]], poly_ring)
        b = OperatorMatrix.parse([["x + y"], ["y"]], poly_ring)
        c = OperatorMatrix.parse([["x"]], poly_ring)
        assert row_module_equal(a, b)
        assert not row_module_equal(a, c)
        assert reduce_matrix(a, c).rows == 1

    def test_column_modules(self, weyl):
        b = OperatorMatrix.parse([["Dy"], ["-Dx"], ["0"]], weyl)
        assert column_module_equal(b, OperatorMatrix.parse([["-2*Dy"], ["2*Dx"], ["0"]], weyl))
        assert not column_module_equal(b, OperatorMatrix.parse([["x*Dy"], ["-x*Dx"], ["0"]], weyl))

    def test_free_modules_must_agree(self, poly_ring):
        with pytest.raises(DimensionMismatchError):
            row_module_equal(OperatorMatrix.parse([["x"]], poly_ring), OperatorMatrix.parse([["x", "y"]], poly_ring))


class TestRandomizedTruncation:
    """Macaulay truncations of random commutative matrices lie in the syzygy module."""

    @pytest.mark.parametrize("seed", range(24))
    def test_containment(self, random_element, seed):
        rng = random.Random(7000 + seed)
        ring = RingSpec.commutative(["x", "y"] if seed % 3 else ["x", "y", "z"])
        degree = 1 + seed % 4 if ring.d == 2 else 1 + seed % 2
        entry_degree = 1 if degree > 2 else 2
        rows, cols = rng.randint(2, 3), rng.randint(1, 2)
        m = OperatorMatrix(ring, [[random_element(ring, rng, terms=2, degree=entry_degree, fractions=False)
                                   for _ in range(cols)] for _ in range(rows)], cols)
        truncated = truncated_syzygies(m, degree)
        assert mat_mul(truncated, m).is_zero()
        assert reduce_matrix(truncated, syzygy_module(m)).rows == 0
        assert all(e.degree() <= degree for row in truncated.row_list() for e in row)
