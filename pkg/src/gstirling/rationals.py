"""Exact rational scalars, their wire format, and factorial-type products.

Every quantity downstream (coefficient triangles, polynomial families,
series oracles) is computed over arbitrary-precision rationals so that
identity checks are exact, never approximate.  ``fractions.Fraction``
already gives lowest-terms storage with a positive denominator, so it is
the Rational type; this module adds the wire format and the rising /
falling factorial products every coefficient formula is built from.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial

Rational = Fraction

_WIRE_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


class WireFormatError(ValueError):
    """A string is not in the exact "p/q" wire form."""


def parse_rational(text: str) -> Fraction:
    """Parse the "p/q" wire form, with "/q" omitted when q == 1.

    Decimal and scientific notation are rejected on purpose: the wire
    format is part of the exactness contract, so one half is "1/2",
    never "0.5".
    """
    s = text.strip()
    if not _WIRE_RE.fullmatch(s):
        raise WireFormatError(f"not a rational in p/q form: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise WireFormatError(f"zero denominator: {text!r}") from None


def format_rational(value: Fraction | int) -> str:
    """Inverse of :func:`parse_rational`; emits "p" or "p/q" with q > 1."""
    return str(Fraction(value))


def rising(a: Fraction | int, n: int) -> Fraction:
    """Rising factorial a(a+1)...(a+n-1); the empty product (n = 0) is 1."""
    if n < 0:
        raise ValueError(f"rising factorial needs n >= 0, got {n}")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def falling(a: Fraction | int, n: int) -> Fraction:
    """Falling factorial a(a-1)...(a-n+1); the empty product (n = 0) is 1."""
    if n < 0:
        raise ValueError(f"falling factorial needs n >= 0, got {n}")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a - i
    return out


def binom(a: Fraction | int, k: int) -> Fraction:
    """Generalized binomial coefficient falling(a, k) / k!."""
    if k < 0:
        raise ValueError(f"binomial coefficient needs k >= 0, got {k}")
    return falling(a, k) / factorial(k)
