"""Exact rational scalars and small numeric helpers.

All engine coordinates are `fractions.Fraction`: arbitrary precision, always in
lowest terms with positive denominator, no rounding anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def rat(value) -> Fraction:
    """Coerce ints, strings like '2/3' or '-7', and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Canonical string form: integer if integral, else 'p/q'."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sign(q: Fraction) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


def sqrt_brackets(q: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(q) <= hi with hi - lo <= width, for q >= 0."""
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return Fraction(0), Fraction(0)
    # isqrt on a scaled integer gives a first bracket, then bisection tightens.
    n, d = q.numerator, q.denominator
    r = math.isqrt(n * d)
    lo = Fraction(r, d)
    hi = Fraction(r + 1, d)
    if lo * lo > q:
        lo = Fraction(0)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if mid * mid <= q:
            lo = mid
        else:
            hi = mid
    return lo, hi
