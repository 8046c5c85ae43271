"""
Tests for exact thresholds and interval notation.
"""

from fractions import Fraction

import pytest

from src.spectral.rational import (
    IntervalError,
    IntervalSpec,
    RationalParseError,
    format_rational,
    parse_interval,
    parse_rational,
)


class TestParseRational:
    """Tests for parse_rational."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            ("1", Fraction(1)),
            ("3/2", Fraction(3, 2)),
            ("0.5", Fraction(1, 2)),
            (" -2/4 ", Fraction(-1, 2)),
            (2, Fraction(2)),
            (0.1, Fraction(1, 10)),
            (Fraction(7, 3), Fraction(7, 3)),
        ],
    )
    def test_accepted_values(self, value, expected):
        """Test that strings, ints, floats and Fractions become exact values."""
        assert parse_rational(value) == expected

    def test_decimal_is_exact(self):
        """Test that "0.1" is exactly one tenth, not the binary float."""
        assert parse_rational("0.1") == Fraction(1, 10)
        assert parse_rational("0.1") != Fraction(0.1)

    @pytest.mark.parametrize("value", ["", "abc", "1/0", "1//2"])
    def test_rejected_text(self, value):
        """Test that garbage text raises RationalParseError."""
        with pytest.raises(RationalParseError, match="not a rational number"):
            parse_rational(value)

    def test_rejects_bool_and_non_finite(self):
        """Test that booleans and infinities are not thresholds."""
        with pytest.raises(RationalParseError, match="booleans"):
            parse_rational(True)
        with pytest.raises(RationalParseError, match="finite"):
            parse_rational(float("inf"))
        with pytest.raises(RationalParseError, match="finite"):
            parse_rational(float("nan"))

    def test_format_rational(self):
        """Test p/q rendering with bare integers."""
        assert format_rational(Fraction(3, 2)) == "3/2"
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-1, 3)) == "-1/3"


class TestParseInterval:
    """Tests for bracket interval notation."""

    def test_half_open(self):
        """Test that "[0,1)" is closed below and open above."""
        interval = parse_interval("[0,1)")

        assert interval == IntervalSpec.half_open(0, 1)
        assert interval.contains(0)
        assert not interval.contains(1)
        assert str(interval) == "[0,1)"

    def test_infinite_upper(self):
        """Test that "(2,inf]" treats infinity as open."""
        interval = parse_interval("(2,inf]")

        assert interval.lower == 2
        assert interval.upper is None
        assert not interval.lower_closed
        assert not interval.upper_closed
        assert interval.contains(10**9)
        assert not interval.contains(2)
        assert str(interval) == "(2,inf)"

    def test_rational_endpoints_and_spaces(self):
        """Test fractional endpoints with whitespace."""
        interval = parse_interval(" [ 1/2 , 3/2 ] ")

        assert interval == IntervalSpec.closed(Fraction(1, 2), Fraction(3, 2))

    def test_negative_infinity(self):
        """Test that -inf is accepted as a lower endpoint."""
        interval = parse_interval("[-inf,0]")

        assert interval.lower is None
        assert interval.contains(-5)

    def test_point_interval(self):
        """Test that [1,1] holds one point and [1,1) is empty."""
        assert not parse_interval("[1,1]").is_empty
        assert parse_interval("[1,1)").is_empty

    def test_reversed_bounds(self):
        """Test that lower > upper raises IntervalError."""
        with pytest.raises(IntervalError, match="exceeds"):
            parse_interval("[2,1)")

    @pytest.mark.parametrize("text", ["0,1", "[0;1)", "{0,1}", "[inf,1)", "[0,-inf]"])
    def test_malformed(self, text):
        """Test that bad notation raises IntervalError."""
        with pytest.raises(IntervalError):
            parse_interval(text)

    def test_bad_endpoint(self):
        """Test that a non-rational endpoint raises RationalParseError."""
        with pytest.raises(RationalParseError):
            parse_interval("[zero,1)")
