"""Exact integer counting primitives.

Every count in this package is a plain Python ``int`` (arbitrary precision,
never floating point), so all arithmetic here is exact by construction and
round-trips losslessly through ``str``/``int``.
"""
from __future__ import annotations

import math
from functools import lru_cache


def binom(n: int, k: int) -> int:
    """C(n, k), returning 0 outside the domain instead of raising.

    Out-of-range arguments (k < 0, k > n, n < 0) yield 0 so that convolution
    loops can iterate rectangular index ranges without edge-case guards.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    """n! for n >= 0."""
    return math.factorial(n)


@lru_cache(maxsize=None)
def pair_fill_count(m: int, n: int) -> int:
    """Ways to occupy n distinct sites, one piece each, drawn from m pairs.

    The two pieces within a pair are identical; distinct pairs are
    distinguishable.  Summing over i, the number of pairs contributing both
    of their pieces:

        sum_i C(m, i) * C(m - i, n - 2i) * n! / 2^i

    The i-th summand picks which pairs are used twice, which of the remaining
    pairs supply a single piece, and arranges all n pieces on the n sites
    (dividing by 2 per doubled pair).  Returns 0 when n > 2m or n < 0.
    """
    if n < 0 or n > 2 * m:
        return 0
    total = 0
    for i in range(n // 2 + 1):
        singles = n - 2 * i
        if singles > m - i:
            continue
        total += binom(m, i) * binom(m - i, singles) * factorial(n) // (2 ** i)
    return total
