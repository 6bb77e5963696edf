import random
from fractions import Fraction

import pytest
from opgp.orealg import OrePoly, RingSpec, mul, parse_operator
from opgp.exceptions import AlgebraError, DimensionMismatchError, RingMismatchError


@pytest.fixture
def weyl():
    return RingSpec.weyl(["x", "y"])


@pytest.fixture
def base(weyl):
    return weyl.base_ring()


class TestWeylProduct:
    """Tests for the normal-ordered product."""

    def test_commutation_relation(self, weyl):
        x, dx = OrePoly.generator(weyl, "x"), OrePoly.generator(weyl, "Dx")
        assert dx * x - x * dx == OrePoly.one(weyl)

    def test_variables_of_different_axes_commute(self, weyl):
        x, dy = OrePoly.generator(weyl, "x"), OrePoly.generator(weyl, "Dy")
        assert dy * x == x * dy

    def test_leibniz_expansion(self, weyl):
        # Dx^2 x^2 = x^2 Dx^2 + 4 x Dx + 2
        assert parse_operator("Dx^2*x^2", weyl) == parse_operator("x^2*Dx^2 + 4*x*Dx + 2", weyl)

    @pytest.mark.parametrize("d, i, j", [(d, i, j) for d in (1, 2, 3) for i in range(d) for j in range(d)])
    def test_weyl_relation(self, weyl_rings, d, i, j):
        ring = weyl_rings[d - 1]
        dx = OrePoly.generator(ring, ring.partials[i])
        x = OrePoly.generator(ring, ring.variables[j])
        expected = OrePoly.one(ring) if i == j else OrePoly.zero(ring)
        assert mul(dx, x) - mul(x, dx) == expected

    def test_commutative_ring_ignores_order(self, base, random_element):
        rng = random.Random(7)
        p, q = random_element(base, rng), random_element(base, rng)
        assert p * q == q * p


class TestRandomizedRingLaws:
    """Seeded random elements of Weyl algebras in up to three variables."""

    @pytest.mark.parametrize("seed", range(300))
    def test_ring_axioms(self, weyl_rings, random_element, seed):
        rng = random.Random(seed)
        ring = weyl_rings[seed % 3]
        p, q, r = (random_element(ring, rng) for _ in range(3))
        one = OrePoly.one(ring)
        assert mul(mul(p, q), r) == mul(p, mul(q, r))
        assert mul(p, q + r) == mul(p, q) + mul(p, r)
        assert mul(p + q, r) == mul(p, r) + mul(q, r)
        assert mul(one, p) == p == mul(p, one)
        assert p - p == OrePoly.zero(ring)

    @pytest.mark.parametrize("seed", range(150))
    def test_commutator_with_partial_differentiates(self, weyl_rings, random_element, seed):
        rng = random.Random(1000 + seed)
        ring = weyl_rings[seed % 3]
        f = random_element(ring.base_ring(), rng).rename(ring, range(ring.d))
        i = rng.randrange(ring.d)
        dx = OrePoly.generator(ring, ring.partials[i])
        assert mul(dx, f) - mul(f, dx) == f.derivative(i)

    @pytest.mark.parametrize("seed", range(150))
    def test_action_respects_products(self, weyl_rings, random_element, seed):
        rng = random.Random(2000 + seed)
        ring = weyl_rings[seed % 3]
        p, q = random_element(ring, rng), random_element(ring, rng)
        f = random_element(ring.base_ring(), rng, degree=4)
        assert mul(p, q).act(f) == p.act(q.act(f))


class TestInvolution:
    """Tests for the anti-automorphism D -> -D."""

    def test_generators(self, weyl):
        assert parse_operator("Dx", weyl).involute() == parse_operator("-Dx", weyl)
        assert parse_operator("x", weyl).involute() == parse_operator("x", weyl)

    def test_reverses_products(self, weyl):
        # theta(x Dx) = -Dx x = -x Dx - 1
        assert parse_operator("x*Dx", weyl).involute() == parse_operator("-x*Dx - 1", weyl)

    @pytest.mark.parametrize("seed", range(200))
    def test_anti_automorphism_and_order_two(self, weyl_rings, random_element, seed):
        rng = random.Random(3000 + seed)
        ring = weyl_rings[seed % 3]
        p, q = random_element(ring, rng), random_element(ring, rng)
        assert mul(p, q).involute() == mul(q.involute(), p.involute())
        assert (p + q).involute() == p.involute() + q.involute()
        assert p.involute().involute() == p


class TestOperatorCalculus:
    """Tests for derivative, act, substitute and evaluate."""

    def test_act_on_polynomial(self, weyl, base):
        f = parse_operator("x^2*y", base)
        assert parse_operator("x*Dx", weyl).act(f) == parse_operator("2*x^2*y", base)
        assert parse_operator("Dx*x", weyl).act(f) == parse_operator("3*x^2*y", base)
        assert parse_operator("Dy^2", weyl).act(f).is_zero()

    def test_act_needs_base_ring(self, weyl):
        with pytest.raises(RingMismatchError):
            parse_operator("Dx", weyl).act(parse_operator("x", weyl))

    def test_derivative_rejects_operators(self, weyl):
        with pytest.raises(AlgebraError):
            parse_operator("Dx", weyl).derivative(0)

    def test_substitute_keeps_partials(self, weyl):
        p = parse_operator("x*y*Dy + x^2", weyl).substitute({0: Fraction(1, 2)})
        assert p == parse_operator("1/2*y*Dy + 1/4", weyl)

    def test_evaluate(self, base):
        assert parse_operator("x^2 - 3*y + 1", base).evaluate([2.0, 1.0]) == pytest.approx(2.0)
        with pytest.raises(DimensionMismatchError):
            parse_operator("x", base).evaluate([1.0])

    def test_negative_power(self, base):
        with pytest.raises(AlgebraError):
            OrePoly.generator(base, "x") ** -1

    def test_mixed_rings(self, weyl, base):
        with pytest.raises(RingMismatchError):
            OrePoly.generator(weyl, "x") + OrePoly.generator(base, "x")

    @pytest.mark.parametrize("text, expected", [
        ("x*Dx + 1", "1*x*Dx + 1"),
        ("-Dx", "-1*Dx"),
        ("x*Dy - y*Dx", "-1*y*Dx + 1*x*Dy"),
        ("1/2*x^2 - y", "1/2*x^2 - 1*y"),
        ("-1", "-1"),
        ("0", "0"),
    ])
    def test_str(self, weyl, text, expected):
        assert str(parse_operator(text, weyl)) == expected
