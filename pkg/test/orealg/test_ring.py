import pytest
from opgp.orealg import Monomial, RingKind, RingSpec
from opgp.exceptions import AlgebraError, UnknownIdentifierError


class TestRingSpec:
    """Tests for RingSpec declaration and lookup."""

    def test_weyl_default_partials(self):
        ring = RingSpec.weyl(["x", "y"])
        assert ring.kind == RingKind.WEYL
        assert ring.partials == ("Dx", "Dy")
        assert ring.names == ("x", "y", "Dx", "Dy")
        assert ring.d == 2

    def test_custom_partials(self):
        ring = RingSpec.weyl(["t"], ["dt"])
        assert ring.locate("dt") == (True, 0)
        assert ring.locate("t") == (False, 0)

    def test_base_ring_is_commutative(self):
        base = RingSpec.weyl(["x", "y", "z"]).base_ring()
        assert base.kind == RingKind.COMMUTATIVE
        assert base.variables == ("x", "y", "z")
        assert base.partials == ()

    @pytest.mark.parametrize("factory", [
        lambda: RingSpec.weyl([]),
        lambda: RingSpec(RingKind.WEYL, ("x", "y"), ("Dx",)),
        lambda: RingSpec(RingKind.COMMUTATIVE, ("x",), ("Dx",)),
        lambda: RingSpec.weyl(["x", "x"]),
        lambda: RingSpec.weyl(["x", "Dx"], ["Dx", "Dy"]),
    ])
    def test_invalid_declarations(self, factory):
        with pytest.raises(AlgebraError):
            factory()

    def test_unknown_identifier(self):
        with pytest.raises(UnknownIdentifierError):
            RingSpec.weyl(["x"]).locate("w")

    def test_str(self):
        assert str(RingSpec.weyl(["x", "y"])) == "Q[x,y]<Dx,Dy>"
        assert str(RingSpec.commutative(["x"])) == "Q[x]"


class TestMonomial:
    """Tests for normal-ordered words."""

    def test_divides_and_quotient(self):
        m = Monomial((2, 1), (0, 1))
        n = Monomial((1, 0), (0, 1))
        assert n.divides(m)
        assert not m.divides(n)
        assert m.quotient(n) == Monomial((1, 1), (0, 0))
        assert n.shift(m.quotient(n)) == m

    def test_lcm(self):
        assert Monomial((2, 0), (0, 0)).lcm(Monomial((1, 3), (0, 0))) == Monomial((2, 3), (0, 0))

    def test_grevlex_prefers_degree_then_last_variable_small(self):
        x, y = Monomial((1, 0), (0, 0)), Monomial((0, 1), (0, 0))
        xy, y3 = Monomial((1, 1), (0, 0)), Monomial((0, 3), (0, 0))
        assert x.grevlex_key() > y.grevlex_key()
        assert y3.grevlex_key() > xy.grevlex_key()

    def test_one_and_unit(self):
        assert Monomial.one(2).is_one
        assert Monomial.unit(2, 1, partial=True) == Monomial((0, 0), (0, 1))
        assert Monomial.unit(2, 0).degree == 1
