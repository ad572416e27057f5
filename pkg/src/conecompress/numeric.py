"""Exact integer and reduced-rational arithmetic primitives.

Every quantity in this package grows doubly exponentially with the
dimension, so all arithmetic is arbitrary precision: plain ``int`` for
integers and :class:`fractions.Fraction` for rationals. Fractions are
always stored reduced with a positive denominator, which the rest of the
package relies on (scale factors are read straight off denominators).
Both types are immutable and safe to share between workers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Ratio = Fraction


def ratio_make(num: int, den: int) -> Fraction:
    """Build a reduced rational; the sign lives on the numerator.

    Raises ZeroDivisionError for a zero denominator.
    """
    r = Fraction(num, den)
    assert r.denominator >= 1 and gcd(abs(r.numerator), r.denominator) == 1
    return r


def ratio_cmp(a: Fraction, b: Fraction) -> int:
    """Exact three-way comparison: -1, 0 or 1 as a <, =, > b."""
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def floor_div(a: int, b: int) -> int:
    """floor(a / b) for b > 0, rounding toward negative infinity."""
    if b <= 0:
        raise ValueError(f"floor_div requires a positive divisor, got {b}")
    return a // b


def ceil_div(a: int, b: int) -> int:
    """ceil(a / b) for b > 0, rounding toward positive infinity."""
    if b <= 0:
        raise ValueError(f"ceil_div requires a positive divisor, got {b}")
    return -((-a) // b)
