"""Exact integer and rational primitives shared by all modules.

Everything downstream works over Python's arbitrary-precision ``int`` and
``fractions.Fraction``; this module pins the binomial-coefficient
conventions those computations rely on.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

__all__ = ["Fraction", "binom", "binom_row", "two_power"]


def binom(a: int, k: int) -> int:
    """Binomial coefficient C(a, k) with the vanishing convention.

    Returns 0 when k < 0 or k > a, so that the closed-form sums over
    binomials are total functions of their index range.  Negative a is a
    caller bug: negative powers are always expanded through the
    (1-y^2)^(-a) series identity, never through a negative binomial.
    """
    if a < 0:
        raise ValueError(f"binom: negative upper argument {a}")
    if k < 0 or k > a:
        return 0
    return comb(a, k)


def binom_row(a: int, length: int) -> list[int]:
    """[C(a, 0), C(a, 1), ..., C(a, length-1)] by the exact ratio recurrence.

    Much cheaper than independent comb() calls when a is large and the
    whole prefix of a Pascal row is needed.
    """
    if a < 0:
        raise ValueError(f"binom_row: negative upper argument {a}")
    out = []
    v = 1
    for d in range(length):
        if d > a:
            out.append(0)
            continue
        if d > 0:
            v = v * (a - d + 1) // d
        out.append(v)
    return out


def two_power(e: int) -> Fraction:
    """2^e as an exact Fraction, for any sign of e."""
    if e >= 0:
        return Fraction(1 << e)
    return Fraction(1, 1 << -e)
