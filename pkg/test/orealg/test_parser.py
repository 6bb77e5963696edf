from fractions import Fraction

import pytest
from opgp.orealg import OrePoly, RingSpec, parse_operator
from opgp.exceptions import OperatorSyntaxError, UnknownIdentifierError, UnsupportedPowerError


@pytest.fixture
def ring():
    return RingSpec.weyl(["x", "y", "z"])


class TestParseOperator:
    """Tests for the operator expression parser."""

    @pytest.mark.parametrize("text, expected", [
        ("-z*Dy + y*Dz", "y*Dz - z*Dy"),
        ("2*x+3", "3 + x*2"),
        ("(x + 1)*(x - 1)", "x^2 - 1"),
        ("-x^2", "-(x*x)"),
        ("+y", "y"),
    ])
    def test_equivalent_forms(self, ring, text, expected):
        assert parse_operator(text, ring) == parse_operator(expected, ring)

    @pytest.mark.parametrize("text, value", [
        ("1/2", Fraction(1, 2)),
        ("0.25", Fraction(1, 4)),
        ("7", Fraction(7)),
    ])
    def test_literals(self, ring, text, value):
        assert parse_operator(text, ring) == OrePoly.constant(ring, value)

    def test_power_binds_tighter_than_product(self, ring):
        assert parse_operator("2*x^2", ring) == OrePoly.generator(ring, "x") ** 2 * 2

    def test_product_keeps_factor_order(self, ring):
        assert parse_operator("Dx*x", ring) != parse_operator("x*Dx", ring)

    @pytest.mark.parametrize("text", ["", "x +", "(x", "x)", "x @ y", "x^y", "1/0", "* x"])
    def test_syntax_errors(self, ring, text):
        with pytest.raises(OperatorSyntaxError):
            parse_operator(text, ring)

    def test_unknown_identifier_reports_position(self, ring):
        with pytest.raises(UnknownIdentifierError) as info:
            parse_operator("x + w", ring)
        assert info.value.position == 4

    @pytest.mark.parametrize("text", ["(x + 1)^2", "x^2^3"])
    def test_unsupported_powers(self, ring, text):
        with pytest.raises(UnsupportedPowerError):
            parse_operator(text, ring)
