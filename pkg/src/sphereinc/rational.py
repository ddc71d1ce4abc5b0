"""Exact rational scalars.

All geometry in this package is carried out over ``fractions.Fraction``,
which already guarantees lowest terms and a positive denominator.  This
module only adds the wire format: rationals travel as strings like
``"3/4"``, ``"-1/2"`` or ``"5"``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError

Rational = Fraction


def rat(value) -> Fraction:
    """Coerce an int, string or Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise InputError(f"refusing float {value!r}; pass an int, Fraction or 'num/den' string")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"not a rational: {value!r}") from exc


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise InputError(f"not a rational: {text!r}")
    if isinstance(text, (int, str, Fraction)):
        return rat(text)
    raise InputError(f"not a rational: {text!r}")
