"""Exact integer combinatorics used throughout the package.

Everything is plain Python int arithmetic; nothing ever rounds.
"""

from __future__ import annotations

import math


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n.

    The out-of-range convention keeps alternating sums honest: a formula can
    run an index past its natural range and pick up exact zeros instead of
    blowing up.  Negative n has no such convention here and is rejected.
    """
    if n < 0:
        raise ValueError(f"binom: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def alt_binom_sum(n: int, m: int) -> int:
    """Partial alternating row sum  sum_{k=0..m} (-1)^k C(n, k).

    Deliberately computed by direct summation; the closed form
    (-1)^m C(n-1, m) is checked against this in the identity sweeps.
    """
    if n < 0:
        raise ValueError(f"alt_binom_sum: n must be nonnegative, got {n}")
    total = 0
    for k in range(m + 1):
        total += -binom(n, k) if k & 1 else binom(n, k)
    return total
