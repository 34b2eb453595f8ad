"""
Numeric helpers for the packing module.

All coordinates, dimensions and areas are exact rationals
(fractions.Fraction). These helpers convert user input to that form and
back to the canonical text used in files.
"""

from fractions import Fraction
from numbers import Rational
from typing import Union

ScalarLike = Union[int, str, Fraction]


def to_scalar(value: ScalarLike) -> Fraction:
    """
    Convert an int, Fraction or numeric string to an exact Fraction.

    Strings may be integers ("4"), decimals ("0.1" -> 1/10) or ratios ("1/3").
    Binary floats are accepted through their shortest decimal repr so that
    0.1 becomes 1/10 rather than the nearest double.

    Args:
        value: The value to convert

    Returns:
        The exact rational value

    Raises:
        ValueError: If the value cannot be read as a number
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("Empty numeric string")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not an exact number: {value!r}") from e
    raise ValueError(f"Not a number: {value!r}")


def _is_finite_decimal(q: Fraction) -> bool:
    d = q.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def format_scalar(q: Fraction) -> str:
    """
    Render a Fraction canonically: "3", "-0.25", or "1/3" when no finite
    decimal expansion exists. to_scalar(format_scalar(q)) == q always.
    """
    if q.denominator == 1:
        return str(q.numerator)
    if not _is_finite_decimal(q):
        return f"{q.numerator}/{q.denominator}"
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole = q.numerator // q.denominator
    rest = q - whole
    digits = []
    while rest:
        rest *= 10
        digit = rest.numerator // rest.denominator
        digits.append(str(digit))
        rest -= digit
    return f"{sign}{whole}.{''.join(digits)}"


def is_integer(q: Fraction) -> bool:
    return q.denominator == 1
