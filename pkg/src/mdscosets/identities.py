"""Exhaustive sweeps of the binomial identities the formula module rests on.

Each sweep returns a list of human-readable failure strings (empty means the
identity held everywhere), so the test suite and the CLI can share them.
Identities over q are polynomial identities and are swept over all integers
2..max_q, not just prime powers.
"""

from __future__ import annotations

from .codes import make_params
from .combinat import alt_binom_sum, binom
from .gf import prime_power
from .spectra import _sgn, delta, delta_star


def pascal_failures(max_n: int) -> list[str]:
    """C(n,k) = C(n-1,k) + C(n-1,k-1) for 1 <= k <= n <= max_n."""
    bad = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            if binom(n, k) != binom(n - 1, k) + binom(n - 1, k - 1):
                bad.append(f"pascal: n={n} k={k}")
    return bad


def subset_chain_failures(max_n: int) -> list[str]:
    """C(n,m)C(m,p) = C(n,p)C(n-p,m-p) = C(n,m-p)C(n-m+p,p) for p <= m <= n."""
    bad = []
    for n in range(max_n + 1):
        for m in range(n + 1):
            for p in range(m + 1):
                a = binom(n, m) * binom(m, p)
                b = binom(n, p) * binom(n - p, m - p)
                c = binom(n, m - p) * binom(n - m + p, p)
                if not a == b == c:
                    bad.append(f"subset chain: n={n} m={m} p={p}")
    return bad


def alternating_failures(max_n: int) -> list[str]:
    """alt_binom_sum(n, m) = (-1)^m C(n-1, m) for 1 <= n <= max_n, 0 <= m <= n."""
    bad = []
    for n in range(1, max_n + 1):
        for m in range(n + 1):
            if alt_binom_sum(n, m) != _sgn(m) * binom(n - 1, m):
                bad.append(f"alternating: n={n} m={m}")
    return bad


def signed_product_failures(max_w: int) -> list[str]:
    """sum_{j=0..m} (-1)^j C(w,j) C(w-j,v) = (-1)^m C(w,v) C(w-v-1,m).

    Swept over 0 <= m, 0 <= v, v + m <= w <= max_w.  The corner v = w (where
    the right side degenerates to C(-1, 0) and the identity is trivially
    1 = 1) is skipped because binom rejects negative n.
    """
    bad = []
    for w in range(max_w + 1):
        for v in range(w):
            for m in range(w - v + 1):
                lhs = sum(_sgn(j) * binom(w, j) * binom(w - j, v) for j in range(m + 1))
                rhs = _sgn(m) * binom(w, v) * binom(w - v - 1, m)
                if lhs != rhs:
                    bad.append(f"signed product: w={w} v={v} m={m}")
    return bad


def q_power_failures(max_w: int, max_q: int) -> list[str]:
    """Alternating q-power sum versus its split form, for 3 <= d <= w <= max_w.

    sum_{j=0..w+1-d} (-1)^j C(w,j) q^(w+1-d-j)
      = sum_{j=0..w-d} (-1)^j C(w,j) (q^(w+1-d-j) - 1) - (-1)^(w-d) C(w-1,d-2).
    """
    bad = []
    for q in range(2, max_q + 1):
        for d in range(3, max_w + 1):
            for w in range(d, max_w + 1):
                lhs = sum(
                    _sgn(j) * binom(w, j) * q ** (w + 1 - d - j) for j in range(w + 2 - d)
                )
                rhs = sum(
                    _sgn(j) * binom(w, j) * (q ** (w + 1 - d - j) - 1)
                    for j in range(w + 1 - d)
                ) - _sgn(w - d) * binom(w - 1, d - 2)
                if lhs != rhs:
                    bad.append(f"q power: q={q} d={d} w={w}")
    return bad


def delta_star_failures(max_q: int) -> list[str]:
    """delta = C(n,2)(q-1)^2 * delta_star over every constructible parameter set."""
    bad = []
    for q in range(2, max_q + 1):
        if prime_power(q) is None:
            continue
        for n in range(2, q + 2):
            for k in range(1, n + 1):
                params = make_params(n, k, q)
                for w in range(n + 1):
                    lhs = delta(params, w)
                    rhs = binom(n, 2) * (q - 1) ** 2 * delta_star(params, w)
                    if lhs != rhs:
                        bad.append(f"delta split: q={q} n={n} k={k} w={w}")
    return bad


def run_all(max_w: int, max_q: int) -> dict[str, list[str]]:
    """Run every sweep; binomial-only sweeps use max_w as their n bound too."""
    return {
        "pascal": pascal_failures(max_w),
        "subset_chain": subset_chain_failures(max_w),
        "alternating": alternating_failures(max_w),
        "signed_product": signed_product_failures(max_w),
        "q_power": q_power_failures(max_w, max_q),
        "delta_star": delta_star_failures(max_q),
    }
