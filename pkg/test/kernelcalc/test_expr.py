import math
from fractions import Fraction

import pytest
from opgp.kernelcalc import GaussianFactor, GaussianPolyExpr, base_kernel, paired_ring
from opgp.orealg import OrePoly, RingSpec, parse_operator
from opgp.exceptions import DimensionMismatchError, RingMismatchError, UnknownVariableError


@pytest.fixture
def k1():
    """exp(-1/2 (x1 - x2)^2)"""
    return base_kernel(1, 1)[0, 0]


class TestGaussianFactor:
    """Tests for squared-exponential factors."""

    def test_paired_and_plain(self):
        assert GaussianFactor.paired(2).is_paired
        assert GaussianFactor.plain(2).is_plain
        assert not GaussianFactor.plain(2).is_paired

    def test_at_point(self):
        factor = GaussianFactor.paired(2, [1, Fraction(1, 4)]).at((1.0, 0.5))
        assert factor.center == (Fraction(1), Fraction(1, 2))
        assert factor.exponent([1.0, 2.5]) == pytest.approx(-0.5 * 0.25 * 4)

    def test_scale_count(self):
        with pytest.raises(DimensionMismatchError):
            GaussianFactor.paired(2, [1])


class TestGaussianPolyExpr:
    """Tests for sums of polynomial times Gaussian terms."""

    def test_paired_ring_names(self):
        assert paired_ring(RingSpec.weyl(["x", "y"])).variables == ("x1", "y1", "x2", "y2")

    def test_evaluate(self, k1):
        assert k1.evaluate([0.3, 0.3]) == pytest.approx(1.0)
        assert k1.evaluate([0.0, 1.0]) == pytest.approx(math.exp(-0.5))

    def test_derivatives_by_name_and_index(self, k1):
        assert k1.diff("x1") == k1.diff(0)
        assert k1.diff("x1").evaluate([1.0, 0.0]) == pytest.approx(-math.exp(-0.5))
        assert k1.diff("x2").evaluate([1.0, 0.0]) == pytest.approx(math.exp(-0.5))

    def test_mixed_second_derivative(self, k1):
        # d/dx1 d/dx2 k = (1 - (x1 - x2)^2) k
        value = k1.diff(0).diff(1).evaluate([0.3, -0.2])
        assert value == pytest.approx(0.75 * math.exp(-0.125))

    def test_derivatives_commute(self, k1):
        assert k1.diff(0).diff(1) == k1.diff(1).diff(0)

    def test_swap_groups(self, k1):
        assert k1.diff("x1").swap_groups() == k1.diff("x2")
        assert k1.swap_groups() == k1

    @pytest.mark.parametrize("variable", ["w", 2, -1])
    def test_unknown_variable(self, k1, variable):
        with pytest.raises(UnknownVariableError):
            k1.diff(variable)

    def test_substitute_second_group(self, k1):
        base = RingSpec.weyl(["x"]).base_ring()
        centered = k1.diff("x2").substitute_group2((1.0,), base)
        assert not centered.is_paired
        assert centered.ring == base
        # (x - 1) exp(-1/2 (x - 1)^2)
        assert centered.evaluate([1.0]) == pytest.approx(0.0)
        assert centered.evaluate([2.0]) == pytest.approx(math.exp(-0.5))

    def test_like_factors_merge(self, k1):
        assert (k1 + k1) == k1.scale(2)
        assert (k1 - k1).is_zero()
        assert len(k1 + k1) == 1

    def test_restrict_polynomials(self):
        ring = RingSpec.commutative(["x", "y"])
        factor = GaussianFactor((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1)))
        expr = GaussianPolyExpr.term(parse_operator("x*y + x^2", ring), factor)
        assert expr.restrict_polynomials({0: 0}).is_zero()
        assert not expr.restrict_polynomials({1: 0}).is_zero()

    def test_mixed_rings(self, k1):
        other = GaussianPolyExpr.term(OrePoly.one(RingSpec.commutative(["a", "b"])), GaussianFactor.paired(1))
        with pytest.raises(RingMismatchError):
            k1 + other
