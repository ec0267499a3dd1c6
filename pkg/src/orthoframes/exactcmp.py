"""Exact integer arithmetic with expressions of the form a - sqrt(b).

Floors, ceilings and comparisons are decided by integer squaring only,
so results are exact for arbitrarily large operands.
"""

from __future__ import annotations

from math import isqrt


def floor_minus_sqrt(a: int, b: int) -> int:
    """Return floor(a - sqrt(b)) for integers a and b >= 0."""
    if b < 0:
        raise ValueError("radicand must be nonnegative, got %d" % b)
    s = isqrt(b)
    return a - s if s * s == b else a - s - 1


def ceil_minus_sqrt(a: int, b: int) -> int:
    """Return ceil(a - sqrt(b)) for integers a and b >= 0."""
    if b < 0:
        raise ValueError("radicand must be nonnegative, got %d" % b)
    # equals a - isqrt(b) whether or not b is a perfect square
    return a - isqrt(b)


def compare_minus_sqrt(d: int, a: int, b: int) -> int:
    """Sign of d - (a - sqrt(b)), computed exactly: -1, 0 or +1."""
    if b < 0:
        raise ValueError("radicand must be nonnegative, got %d" % b)
    t = a - d
    if t < 0:
        # d > a >= a - sqrt(b)
        return 1
    # sign of sqrt(b) - t with t >= 0
    if b > t * t:
        return 1
    if b == t * t:
        return 0
    return -1


def floor_half(k: int) -> int:
    """floor(k / 2) with Python floor-division semantics."""
    return k // 2


def ceil_half(k: int) -> int:
    """ceil(k / 2) for any integer k."""
    return -((-k) // 2)
