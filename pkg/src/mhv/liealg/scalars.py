"""Exact rational scalars and half-integer indices.

All coefficients in the package are :class:`fractions.Fraction`.  Text
literals follow the ``p`` / ``p/q`` grammar used by the config files and the
seed-expression language; decimals, floats and complex values are rejected.
"""
import re
from fractions import Fraction

from ..errors import ScalarParseError

Scalar = Fraction

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_scalar(value):
    """Coerce ``value`` to an exact :class:`Fraction`.

    Accepts ``int``, ``Fraction`` and strings ``"p"`` / ``"p/q"``.  Floats are
    refused on purpose: every criterion in this package is a zero test.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ScalarParseError(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise ScalarParseError(f"not an exact rational: {value!r}")


def parse_scalar(text):
    match = _RATIONAL.match(text)
    if not match:
        raise ScalarParseError(f"not a rational literal: {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def render_scalar(x):
    """Canonical ``p/q`` (or ``p``) rendering; never a float."""
    x = Fraction(x)
    return str(x)


def parse_half(value):
    """Parse a half-odd index ``r`` (e.g. ``"-3/2"``) and return ``2r``."""
    r = as_scalar(value)
    twice = 2 * r
    if twice.denominator != 1 or twice.numerator % 2 == 0:
        raise ScalarParseError(f"{value!r} is not in 1/2 + Z")
    return twice.numerator


def render_half(twice):
    return f"{twice}/2"
