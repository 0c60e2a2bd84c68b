"""Exact rational scalars.

All run-time geometry in this package happens over the rationals, carried
by :class:`fractions.Fraction` (arbitrary-precision, always reduced,
denominator positive).  Nothing in the package ever touches a float except
the final decimal serialization step of the SVG renderer.

The wire format for a rational is the string ``"p/q"`` with the sign on
the numerator, or just ``"p"`` when the denominator is 1; this is exactly
what ``str(Fraction)`` produces.
"""

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def rational(value):
    """Coerce ``value`` (int, Fraction or \"p/q\" string) to a Fraction.

    Floats are rejected: exact arithmetic everywhere is a package-wide
    invariant and a float argument is always a caller bug.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text):
    """Parse a \"p/q\" (or \"p\") string into a Fraction.

    Stricter than the Fraction constructor: decimal points, exponents and
    zero or signed denominators are all rejected.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    return Fraction(text)


def format_rational(q):
    """Serialize a Fraction to its canonical \"p/q\" (or \"p\") string."""
    return str(rational(q))
