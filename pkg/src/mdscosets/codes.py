"""MDS code parameters and explicit polynomial-evaluation constructions.

A code here is always [n, k, d]_q with d = n - k + 1 (MDS).  The generator
matrix evaluates message polynomials of degree < k at the first n field
elements in index order; for n = q + 1 the evaluation runs over the whole
field and one extra coordinate holds the coefficient of x^(k-1).  Both
constructions are classical MDS families, and the test suite re-checks the
property by exhaustive column minors and by enumerating codewords.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .combinat import binom
from .gf import MAX_ORDER, MIN_ORDER, Field, make_field, prime_power

# A spectrum is the histogram of Hamming weights 0..n, as exact ints.
Spectrum = list[int]


@dataclass(frozen=True)
class CodeParams:
    """Parameters [n, k, d]_q of an MDS code; d and t are derived fields."""

    n: int
    k: int
    q: int
    d: int
    t: int


def make_params(n: int, k: int, q: int) -> CodeParams:
    """Validate (n, k, q) and derive d = n - k + 1, t = (d - 1) // 2.

    Constructible range: q a prime power with 2 <= q <= 32 and
    1 <= k <= n <= q + 1.  Longer (doubly extended) codes are out of scope.
    """
    if prime_power(q) is None or not MIN_ORDER <= q <= MAX_ORDER:
        raise ValueError(
            f"q must be a prime power with {MIN_ORDER} <= q <= {MAX_ORDER}, got {q}"
        )
    if k < 1:
        raise ValueError(f"dimension k must be at least 1, got {k}")
    if k > n:
        raise ValueError(f"dimension k = {k} exceeds length n = {n}")
    if n > q + 1:
        raise ValueError(f"length n = {n} exceeds q + 1 = {q + 1}")
    d = n - k + 1
    return CodeParams(n=n, k=k, q=q, d=d, t=(d - 1) // 2)


@dataclass(frozen=True)
class MdsCode:
    params: CodeParams
    field: Field
    generator: list[list[int]]  # k x n
    parity_check: list[list[int]]  # (n-k) x n, generator @ parity_check.T == 0


def _kernel(gen: list[list[int]], f: Field, n: int, k: int) -> list[list[int]]:
    """Basis of the right kernel of gen, via row reduction over f."""
    rows = [list(r) for r in gen]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, k) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        scale = f.inv(rows[r][c])
        rows[r] = [f.mul(scale, x) for x in rows[r]]
        for i in range(k):
            if i != r and rows[i][c] != 0:
                coef = rows[i][c]
                rows[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == k:
            break
    if r < k:
        raise ValueError("generator matrix is rank deficient")
    free = [c for c in range(n) if c not in pivots]
    h = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(rows[i][fc])
        h.append(v)
    return h


def build_code(params: CodeParams) -> MdsCode:
    """Construct the generator and parity-check matrices for params."""
    f = make_field(params.q)
    n, k, q = params.n, params.k, params.q
    npoints = min(n, q)
    gen = []
    for i in range(k):
        row = [f.pow(a, i) for a in range(npoints)]
        if n == q + 1:
            row.append(1 if i == k - 1 else 0)
        gen.append(row)
    h = _kernel(gen, f, n, k)
    for hrow in h:
        for grow in gen:
            acc = 0
            for a, b in zip(grow, hrow):
                acc = f.add(acc, f.mul(a, b))
            if acc:
                raise AssertionError("parity-check rows are not orthogonal to the generator")
    return MdsCode(params=params, field=f, generator=gen, parity_check=h)


def mds_weight(params: CodeParams, w: int) -> int:
    """Number of codewords of weight w in any [n, k, n-k+1]_q MDS code.

    w = 0 counts the zero word; weights strictly between 0 and d are
    impossible; from d upward the count is the classical alternating sum.
    """
    n, q, d = params.n, params.q, params.d
    if not 0 <= w <= n:
        raise ValueError(f"w must be in [0, {n}], got {w}")
    if w == 0:
        return 1
    if w < d:
        return 0
    total = 0
    for j in range(w - d + 1):
        term = binom(w, j) * (q ** (w - d + 1 - j) - 1)
        total += -term if j & 1 else term
    return binom(n, w) * total


def sphere_volume(n: int, q: int, t: int) -> int:
    """Number of vectors of GF(q)^n within Hamming distance t of a point."""
    if n < 0 or t < 0:
        raise ValueError("sphere_volume needs n >= 0 and t >= 0")
    return sum((q - 1) ** i * binom(n, i) for i in range(t + 1))


def codeword_weight_histogram(code: MdsCode) -> Spectrum:
    """Exact weight histogram of all q^k codewords, by enumeration."""
    f, params = code.field, code.params
    n, k, q = params.n, params.k, params.q
    if q**k * n > 64_000_000:
        raise ValueError("codeword enumeration is capped at q^k * n <= 64e6 cells")
    add = np.array([[f.add(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
    mul = np.array([[f.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
    words = np.zeros((1, n), dtype=np.uint8)
    for i in range(k):
        row = np.array(code.generator[i], dtype=np.uint8)
        scaled = mul[np.arange(q)[:, None], row[None, :]]  # (q, n)
        words = add[words[None, :, :], scaled[:, None, :]].reshape(-1, n)
    weights = (words != 0).sum(axis=1)
    hist = np.bincount(weights, minlength=n + 1)
    return [int(x) for x in hist]


def _rank(rows: list[list[int]], f: Field, width: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    for c in range(width):
        pr = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        scale = f.inv(rows[rank][c])
        rows[rank] = [f.mul(scale, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                coef = rows[i][c]
                rows[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def verify_mds_property(code: MdsCode) -> bool:
    """True iff every k columns of the generator are linearly independent.

    Exhaustive over C(n, k) column subsets, so meant for small codes.
    """
    k, n = code.params.k, code.params.n
    for cols in itertools.combinations(range(n), k):
        sub = [[code.generator[i][c] for c in cols] for i in range(k)]
        if _rank(sub, code.field, k) < k:
            return False
    return True
