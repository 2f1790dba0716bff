"""Exact integer helpers: gcd, continued fractions, Stern-Brocot mediant parents.

Everything here is plain arbitrary-precision integer arithmetic.  Coprime
pairs are passed around as bare ``(kappa, r)`` tuples; the resolution layer
wraps them in a richer type.
"""

from __future__ import annotations

from math import gcd as _math_gcd
from typing import Sequence


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two non-negative integers, not both zero."""
    if a < 0 or b < 0:
        raise ValueError("gcd arguments must be non-negative")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return _math_gcd(a, b)


def _require_coprime_positive(kappa: int, r: int) -> None:
    if kappa < 1 or r < 1:
        raise ValueError(f"({kappa}, {r}): both entries must be >= 1")
    if _math_gcd(kappa, r) != 1:
        raise ValueError(f"({kappa}, {r}) is not a coprime pair")


def continued_fraction(kappa: int, r: int) -> list[int]:
    """Canonical continued fraction [q0; q1, ..., qk] of kappa/r.

    Requires kappa, r >= 1 coprime.  The Euclidean algorithm yields the
    canonical form directly: the last quotient is >= 2 unless the expansion
    has length one.
    """
    _require_coprime_positive(kappa, r)
    quotients = []
    a, b = kappa, r
    while b:
        quotients.append(a // b)
        a, b = b, a % b
    return quotients


def cf_value(quotients: Sequence[int]) -> tuple[int, int]:
    """Evaluate a continued fraction to a fraction (numerator, denominator).

    The empty expansion evaluates to (1, 0), the Stern-Brocot endpoint "1/0".
    """
    num, den = 1, 0
    for q in reversed(quotients):
        num, den = q * num + den, num
    return num, den


def pair_less(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Whether kappa_a / r_a < kappa_b / r_b, treating r = 0 as slope infinity."""
    return a[0] * b[1] < b[0] * a[1]


def parents_from_cf(kappa: int, r: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The two coprime pairs whose mediant is (kappa, r).

    Truncating the continued fraction of kappa/r gives one parent and
    decrementing its last quotient gives the other.  Returns the pair
    ``(low, high)`` where ``low`` has the smaller value kappa/r, i.e. it is
    the parent on the (0, 1) side of the Stern-Brocot tree.  The endpoints
    (1, 0) and (0, 1) have no parents and are rejected.
    """
    _require_coprime_positive(kappa, r)
    quotients = continued_fraction(kappa, r)
    truncated = cf_value(quotients[:-1])
    decremented = cf_value(quotients[:-1] + [quotients[-1] - 1])
    first, second = truncated, decremented
    if pair_less(second, first):
        first, second = second, first
    if first[0] + second[0] != kappa or first[1] + second[1] != r:
        raise AssertionError(f"parent reconstruction failed for ({kappa}, {r})")
    return first, second
