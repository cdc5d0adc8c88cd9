"""Exhaustive coset census for small linear codes.

This is the trusted side of every cross-check in the package, so it never
touches a closed-form count: each vector of GF(q)^n is visited exactly once,
its syndrome H v^T picked out as a bucket index, and per-bucket weight
histograms accumulated.  Buckets are cosets; the weight of a coset is the
smallest weight occurring in its bucket.

Enumeration runs in blocks to stay fast: the last L coordinates are
tabulated once (their syndrome contributions and weights as numpy arrays),
then the q^(n-L) coordinate prefixes are walked one by one and each block of
q^L suffixes is counted with table lookups.  Workers split the prefix range;
merging partial counts is plain integer addition, so the result does not
depend on the worker count or scheduling.  A tiny pure-Python census
(`census_reference`) provides an independent implementation for
cross-checking the blocked one on small codes.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .codes import CodeParams, MdsCode, Spectrum, build_code, make_params

ENUMERATION_BUDGET = 200_000_000  # max q**n vectors per census
_BLOCK_CAP = 1 << 20  # max suffix block size q**L
_BUCKET_ENTRY_CAP = 1 << 27  # max q**(n-k) * (n+1) int64 counters


class BudgetExceededError(Exception):
    """A census would need more enumeration or memory than configured."""


@dataclass(frozen=True)
class WeightClass:
    """All cosets sharing one coset weight: how many, and their summed spectrum."""

    coset_count: int
    spectrum: Spectrum


@dataclass(frozen=True)
class CosetCensus:
    params: CodeParams
    covering_radius: int
    per_weight: dict[int, WeightClass]

    def cumulative_spectrum(self, max_weight: int) -> Spectrum:
        """Summed spectrum of every coset of weight <= max_weight."""
        out = [0] * (self.params.n + 1)
        for wt, cls in self.per_weight.items():
            if wt <= max_weight:
                out = [a + b for a, b in zip(out, cls.spectrum)]
        return out


def _check_budget(params: CodeParams) -> None:
    n, k, q = params.n, params.k, params.q
    if q**n > ENUMERATION_BUDGET:
        raise BudgetExceededError(
            f"census of GF({q})^{n} would enumerate {q**n} vectors; "
            f"budget is {ENUMERATION_BUDGET}"
        )
    if q ** (n - k) * (n + 1) > _BUCKET_ENTRY_CAP:
        raise BudgetExceededError(
            f"census of [{n}, {k}]_{q} would need {q ** (n - k)} syndrome buckets "
            f"with {n + 1} counters each; cap is {_BUCKET_ENTRY_CAP} counters"
        )


def _field_tables(f, q: int) -> tuple[np.ndarray, np.ndarray]:
    add = np.array([[f.add(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
    mul = np.array([[f.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
    return add, mul


def _count_range(code: MdsCode, lo: int, hi: int, nsuffix: int) -> np.ndarray:
    """Histogram (syndrome bucket, weight) over prefixes lo..hi-1.

    Returns a flat int64 array of length q**(n-k) * (n+1) where the cell
    bucket*(n+1) + w counts the weight-w vectors with that syndrome.
    """
    f, h, params = code.field, code.parity_check, code.params
    n, k, q = params.n, params.k, params.q
    r = n - k
    add, mul = _field_tables(f, q)
    size = q**nsuffix
    arange = np.arange(size, dtype=np.int64)
    digits = np.empty((size, nsuffix), dtype=np.uint8)
    for j in range(nsuffix):
        digits[:, j] = (arange // q ** (nsuffix - 1 - j)) % q
    w_suffix = (digits != 0).sum(axis=1).astype(np.int64)
    s_suffix = []
    for i in range(r):
        acc = np.zeros(size, dtype=np.uint8)
        for j in range(nsuffix):
            col = h[i][n - nsuffix + j]
            if col:
                acc = add[acc, mul[col, digits[:, j]]]
        s_suffix.append(acc)

    nprefix_coords = n - nsuffix
    nbuckets = q**r
    counts = np.zeros(nbuckets * (n + 1), dtype=np.int64)
    pows = [q**i for i in range(r)]
    for pidx in range(lo, hi):
        pdig = [(pidx // q ** (nprefix_coords - 1 - j)) % q for j in range(nprefix_coords)]
        wp = sum(1 for x in pdig if x)
        bucket = np.zeros(size, dtype=np.int64)
        for i in range(r):
            s = 0
            for j in range(nprefix_coords):
                s = f.add(s, f.mul(h[i][j], pdig[j]))
            bucket += add[s_suffix[i], s].astype(np.int64) * pows[i]
        counts += np.bincount(bucket * (n + 1) + (w_suffix + wp), minlength=len(counts))
    return counts


def _count_range_worker(args: tuple[int, int, int, int, int, int]) -> np.ndarray:
    # rebuilt from parameters so the work unit pickles cheaply; construction
    # is deterministic, so every worker sees the same code
    n, k, q, lo, hi, nsuffix = args
    return _count_range(build_code(make_params(n, k, q)), lo, hi, nsuffix)


def _aggregate(params: CodeParams, counts: np.ndarray) -> CosetCensus:
    n, k, q = params.n, params.k, params.q
    counts = counts.reshape(q ** (n - k), n + 1)
    if int(counts.sum()) != q**n:
        raise AssertionError("census lost or double-counted vectors")
    nonzero = counts != 0
    if not nonzero.any(axis=1).all():
        raise AssertionError("every syndrome bucket must hold q^k vectors")
    min_weights = nonzero.argmax(axis=1)
    per_weight = {}
    for wt in sorted(set(int(x) for x in min_weights)):
        rows = counts[min_weights == wt]
        per_weight[wt] = WeightClass(
            coset_count=int(rows.shape[0]),
            spectrum=[int(x) for x in rows.sum(axis=0)],
        )
    return CosetCensus(
        params=params,
        covering_radius=int(min_weights.max()),
        per_weight=per_weight,
    )


def census(code: MdsCode, workers: int = 1) -> CosetCensus:
    """Enumerate GF(q)^n and bucket every vector by syndrome.

    `workers` > 1 splits the coordinate-prefix range over processes; the
    outcome is identical for any worker count.
    """
    params = code.params
    _check_budget(params)
    n, q = params.n, params.q
    nsuffix = 1
    while nsuffix < n and q ** (nsuffix + 1) <= _BLOCK_CAP:
        nsuffix += 1
    nprefix = q ** (n - nsuffix)
    if workers > 1 and nprefix > 1:
        nchunks = min(workers, nprefix)
        bounds = [nprefix * i // nchunks for i in range(nchunks + 1)]
        jobs = [
            (n, params.k, q, bounds[i], bounds[i + 1], nsuffix) for i in range(nchunks)
        ]
        with ProcessPoolExecutor(max_workers=nchunks) as pool:
            counts = np.zeros(q ** (n - params.k) * (n + 1), dtype=np.int64)
            for part in pool.map(_count_range_worker, jobs):
                counts += part
    else:
        counts = _count_range(code, 0, nprefix, nsuffix)
    return _aggregate(params, counts)


def census_reference(code: MdsCode) -> CosetCensus:
    """Dumb per-vector census; quadratically slower, for cross-checks only."""
    f, h, params = code.field, code.parity_check, code.params
    n, k, q = params.n, params.k, params.q
    _check_budget(params)
    if q**n > 100_000:
        raise BudgetExceededError("census_reference is meant for q**n <= 1e5")
    r = n - k
    buckets: dict[tuple[int, ...], list[int]] = {}
    for vec in itertools.product(range(q), repeat=n):
        syn = []
        for i in range(r):
            s = 0
            for hij, vj in zip(h[i], vec):
                s = f.add(s, f.mul(hij, vj))
            syn.append(s)
        hist = buckets.setdefault(tuple(syn), [0] * (n + 1))
        hist[n - vec.count(0)] += 1
    flat = np.zeros((q**r, n + 1), dtype=np.int64)
    pows = [q**i for i in range(r)]
    for syn, hist in buckets.items():
        idx = sum(s * p for s, p in zip(syn, pows))
        flat[idx] = hist
    return _aggregate(params, flat.reshape(-1))


def covering_radius(code: MdsCode, workers: int = 1) -> int:
    """Largest coset weight, measured by full enumeration."""
    return census(code, workers=workers).covering_radius
