"""
Exact thresholds and eigenvalue intervals.

Thresholds are fractions.Fraction values (arbitrary precision, lowest terms,
positive denominator). Decimal strings are read as exact decimal fractions,
so "0.1" is 1/10 and "1" is exactly one.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from src.core.errors import SpectreeError

logger = logging.getLogger(__name__)

_INFINITY_TOKENS = {"inf", "+inf", "infinity", "+infinity", "∞", "+∞"}
_NEG_INFINITY_TOKENS = {"-inf", "-infinity", "-∞"}

_INTERVAL_RE = re.compile(r"^\s*([\[(])\s*([^,]+?)\s*,\s*([^\])]+?)\s*([\])])\s*$")


class RationalParseError(SpectreeError):
    """Text that is not an exact rational number."""

    def __init__(self, text: object, detail: str = ""):
        message = f"not a rational number: {text!r}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.text = text


class IntervalError(SpectreeError):
    """An interval whose lower bound exceeds its upper bound, or bad notation."""


def parse_rational(value: str | int | float | Fraction) -> Fraction:
    """
    Convert user input to an exact Fraction.

    Accepts integers, Fractions, "p/q" strings and decimal strings. Floats are
    converted through their shortest decimal repr, so 0.5 from a command line
    flag becomes exactly 1/2.

    Raises:
        RationalParseError: On empty text, non-finite values or garbage
    """
    if isinstance(value, bool):
        raise RationalParseError(value, "booleans are not thresholds")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise RationalParseError(value, "threshold must be finite")
        return Fraction(repr(value))

    text = str(value).strip()
    if not text:
        raise RationalParseError(value, "empty")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise RationalParseError(value, str(e)) from e


def format_rational(value: Fraction) -> str:
    """Render as p/q, or as a bare integer when the denominator is one."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class IntervalSpec:
    """
    A real interval with rational or infinite endpoints.

    Attributes:
        lower: Lower endpoint, None for minus infinity
        upper: Upper endpoint, None for plus infinity
        lower_closed: Whether the lower endpoint belongs to the interval
        upper_closed: Whether the upper endpoint belongs to the interval
    """

    lower: Fraction | None
    upper: Fraction | None
    lower_closed: bool = True
    upper_closed: bool = False

    def __post_init__(self) -> None:
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise IntervalError(
                f"lower bound {format_rational(self.lower)} exceeds "
                f"upper bound {format_rational(self.upper)}"
            )

    @classmethod
    def closed(cls, lower: Fraction | int, upper: Fraction | int) -> "IntervalSpec":
        return cls(Fraction(lower), Fraction(upper), True, True)

    @classmethod
    def half_open(cls, lower: Fraction | int, upper: Fraction | int) -> "IntervalSpec":
        """[lower, upper)"""
        return cls(Fraction(lower), Fraction(upper), True, False)

    @property
    def is_empty(self) -> bool:
        if self.lower is None or self.upper is None:
            return False
        return self.lower == self.upper and not (self.lower_closed and self.upper_closed)

    def contains(self, x: Fraction | int) -> bool:
        x = Fraction(x)
        if self.lower is not None:
            if x < self.lower or (x == self.lower and not self.lower_closed):
                return False
        if self.upper is not None:
            if x > self.upper or (x == self.upper and not self.upper_closed):
                return False
        return True

    def __str__(self) -> str:
        left = "[" if self.lower is not None and self.lower_closed else "("
        right = "]" if self.upper is not None and self.upper_closed else ")"
        lo = "-inf" if self.lower is None else format_rational(self.lower)
        hi = "inf" if self.upper is None else format_rational(self.upper)
        return f"{left}{lo},{hi}{right}"


def _parse_endpoint(token: str, upper: bool) -> Fraction | None:
    lowered = token.lower()
    if lowered in _INFINITY_TOKENS:
        if not upper:
            raise IntervalError("lower endpoint cannot be +inf")
        return None
    if lowered in _NEG_INFINITY_TOKENS:
        if upper:
            raise IntervalError("upper endpoint cannot be -inf")
        return None
    return parse_rational(token)


def parse_interval(text: str) -> IntervalSpec:
    """
    Parse bracket notation such as "[0,1)", "(2,inf]" or "[1/2, 3/2]".

    An infinite endpoint is always treated as open, whatever bracket it has.

    Raises:
        IntervalError: On malformed notation or lower > upper
        RationalParseError: On an endpoint that is not rational
    """
    match = _INTERVAL_RE.match(text)
    if not match:
        raise IntervalError(f"expected bracket notation like '[0,1)', got {text!r}")
    left, lo_text, hi_text, right = match.groups()
    lower = _parse_endpoint(lo_text, upper=False)
    upper = _parse_endpoint(hi_text, upper=True)
    return IntervalSpec(
        lower=lower,
        upper=upper,
        lower_closed=left == "[" and lower is not None,
        upper_closed=right == "]" and upper is not None,
    )
