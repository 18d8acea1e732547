"""Exact integers and rationals.

``fractions.Fraction`` already keeps the canonical form we need (reduced,
positive denominator, zero as 0/1), so it is used directly as the rational
type.
"""
from __future__ import annotations

import math
from fractions import Fraction

from goddard.errors import ZeroDenominator

ExactRational = Fraction


def rational_make(numerator: int, denominator: int = 1) -> Fraction:
    if denominator == 0:
        raise ZeroDenominator(f"zero denominator for numerator {numerator}")
    return Fraction(numerator, denominator)


def binomial(n: int, k: int) -> int:
    """Return C(n, k) for nonnegative ``n`` and ``k``; zero when ``k > n``.

    Uses the multiplicative formula. Each partial product
    ``C(n, i) * (n - i) / (i + 1)`` is again an integer, so floor division is
    exact and intermediates stay no larger than the result times ``n``.
    """
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def render(value: Fraction | int) -> str:
    """Canonical text form: ``p/q``, or just ``p`` when q == 1."""
    return str(Fraction(value))
