"""
Exact rational arithmetic for breakpoints, slopes and classification.

Rationals are plain ``fractions.Fraction`` values, which are always stored in
lowest terms with a positive denominator. This module adds the pieces the rest
of the package relies on: a storage-width check (Python integers never wrap,
so overflow has to be detected explicitly), strict parsing of the "a/b" and
finite-decimal input formats, and the "num/den" rendering used in every file
this package writes.
"""

import logging
import operator
import re
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Union

from src.config import get_settings
from src.core.errors import RationalOverflowError, RationalParseError

logger = logging.getLogger(__name__)

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

_FRACTION_RE = re.compile(r"^([+-]?\d+)\s*/\s*([+-]?\d+)$")
_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")

_OPERATIONS: Dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def check_width(value: Fraction) -> Fraction:
    """
    Verify that a reduced fraction fits the configured signed integer width.

    Args:
        value: Fraction to check

    Returns:
        The same fraction, so the call can wrap an expression

    Raises:
        RationalOverflowError: numerator or denominator is too wide
    """
    limit = 2 ** (get_settings().rational_bits - 1) - 1
    if abs(value.numerator) > limit or value.denominator > limit:
        raise RationalOverflowError(
            f"{value.numerator}/{value.denominator} exceeds "
            f"{get_settings().rational_bits}-bit storage"
        )
    return value


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """
    Apply one of add, sub, mul, div exactly and check the result width.

    Args:
        a: Left operand
        b: Right operand
        op: One of "add", "sub", "mul", "div"

    Returns:
        Reduced exact result

    Raises:
        ZeroDivisionError: op is "div" and b is zero
        RationalOverflowError: the reduced result does not fit the storage width
        ValueError: unknown operation name
    """
    try:
        fn = _OPERATIONS[op]
    except KeyError as exc:
        raise ValueError(f"Unknown rational operation '{op}'") from exc
    if op == "div" and b == 0:
        raise ZeroDivisionError(f"Division of {rat_render(a)} by zero")
    return check_width(fn(Fraction(a), Fraction(b)))


def rat_parse(text: Union[str, int]) -> Fraction:
    """
    Parse "a/b", an integer, or a finite decimal such as "0.45" exactly.

    Args:
        text: The textual value (integers are accepted as-is)

    Returns:
        Exact reduced fraction

    Raises:
        RationalParseError: the text is not in one of the accepted forms
        ZeroDivisionError: the denominator is zero
    """
    if isinstance(text, bool):
        raise RationalParseError(f"Cannot read a boolean as a rational: {text!r}")
    if isinstance(text, int):
        return check_width(Fraction(text))
    if not isinstance(text, str):
        raise RationalParseError(f"Expected a string, got {type(text).__name__}")

    stripped = text.strip()
    match = _FRACTION_RE.match(stripped)
    if match:
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise ZeroDivisionError(f"Zero denominator in '{text}'")
        return check_width(Fraction(numerator, denominator))
    if _DECIMAL_RE.match(stripped):
        return check_width(Fraction(stripped))

    raise RationalParseError(f"Malformed rational '{text}' (expected a/b or a decimal)")


def rat_render(value: Fraction) -> str:
    """Render as "num/den", including integers ("3/1")."""
    return f"{value.numerator}/{value.denominator}"


def rat_to_decimal(value: Fraction, digits: int = 12) -> str:
    """
    Render a fraction as a decimal string rounded to significant digits.

    Args:
        value: Fraction to render
        digits: Number of significant digits

    Returns:
        Plain (non-exponent) decimal string, e.g. "0.428571428571"
    """
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        rounded = Decimal(value.numerator) / Decimal(value.denominator)
    text = format(rounded, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def rat_sum(values: Iterable[Fraction]) -> Fraction:
    """Exact sum with a single width check on the result."""
    return check_width(sum(values, ZERO))


def parse_vector(texts: Iterable[Union[str, int]]) -> List[Fraction]:
    return [rat_parse(text) for text in texts]
