"""Exact scalar arithmetic shared by every other module.

Rationals are plain :class:`fractions.Fraction` values: they are immutable,
always reduced, and keep the sign on the numerator, which is exactly the
canonical form the rest of the package relies on for equality.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) as an integer-valued Fraction; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return ZERO
    return Fraction(math.comb(n, k))


def floor_half(n: int) -> int:
    if n < 0:
        raise ValueError(f"floor_half: n must be non-negative, got {n}")
    return n // 2


def parity_mask(n: int) -> int:
    """1 for even ``n``, 0 for odd ``n``."""
    if n < 0:
        raise ValueError(f"parity_mask: n must be non-negative, got {n}")
    return 1 - (n & 1)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; decimals and exponents are refused.

    >>> parse_rational("-3/7")
    Fraction(-3, 7)
    >>> parse_rational("4/2")
    Fraction(2, 1)
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational in p/q form: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Fraction | int) -> str:
    """Canonical text form: ``"p"`` for integers, ``"p/q"`` otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
