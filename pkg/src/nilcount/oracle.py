"""Brute-force ground truth: classify strictly upper-triangular matrices.

Enumerates every strictly upper-triangular n x n matrix over a prime field
(or samples them), reads off the Jordan type from the rank sequence of the
matrix powers, and tallies counts per partition. The hot loops are numba
kernels; q = 2 takes a bit-packed XOR-elimination path, general primes use
byte matrices with modular elimination.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .partitions import Partition, to_symbolic


class OracleError(ValueError):
    pass


class BudgetError(OracleError):
    """Enumeration would exceed the configured matrix-count budget."""


DEFAULT_BUDGET = 10**8


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def _require_prime(q: int) -> None:
    if not _is_prime(q):
        raise OracleError(f"field order {q} is not prime")


@dataclass(frozen=True)
class UTMatrix:
    """Strictly upper-triangular matrix over F_q.

    Only the n(n-1)/2 above-diagonal entries are stored, row-major:
    (0,1), (0,2), ..., (0,n-1), (1,2), ...
    """

    n: int
    q: int
    entries: tuple[int, ...]

    def __post_init__(self):
        _require_prime(self.q)
        m = self.n * (self.n - 1) // 2
        if len(self.entries) != m:
            raise OracleError(f"expected {m} entries for n={self.n}, got {len(self.entries)}")
        if any(not 0 <= x < self.q for x in self.entries):
            raise OracleError("entries must lie in 0..q-1")

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        k = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                a[i, j] = self.entries[k]
                k += 1
        return a


def matrix_rank(m: np.ndarray, q: int) -> int:
    """Rank of a square matrix over F_q, q prime, by Gaussian elimination."""
    _require_prime(q)
    if q == 2:
        rows = [int("".join(str(int(x) & 1) for x in row[::-1]), 2) for row in m]
        return _gf2_rank_bits(rows, m.shape[1])
    a = np.array(m, dtype=np.int64) % q
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if a[r, col] % q:
                pivot = r
                break
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), q - 2, q)
        a[rank] = (a[rank] * inv) % q
        for r in range(nrows):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % q
        rank += 1
        if rank == nrows:
            break
    return rank


def _gf2_rank_bits(rows: list[int], n_cols: int) -> int:
    work = rows[:]
    rank = 0
    for col in range(n_cols):
        pivot = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
        rank += 1
    return rank


def jordan_type(m: UTMatrix) -> Partition:
    """Jordan type from second differences of the rank sequence.

    With r_k the rank of the k-th power (r_0 = n), the number of blocks of
    size k is r_(k-1) - 2 r_k + r_(k+1).
    """
    a = m.to_array()
    ranks = [m.n]
    power = a.copy()
    while True:
        r = matrix_rank(power, m.q)
        ranks.append(r)
        if r == 0:
            break
        power = power @ a % m.q
    ranks.append(0)
    parts: list[int] = []
    for k in range(1, len(ranks) - 1):
        blocks = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        parts.extend([k] * blocks)
    return Partition(sorted(parts, reverse=True))


@dataclass
class CountTally:
    """Per-Jordan-type tally for fixed n and q."""

    n: int
    q: int
    mode: str  # "exhaustive" or "sample"
    counts: dict[Partition, int] = field(default_factory=dict)
    total: int = 0

    def to_json(self) -> str:
        items = sorted(self.counts.items(), key=lambda kv: kv[0].parts, reverse=True)
        return json.dumps(
            {
                "n": self.n,
                "q": self.q,
                "mode": self.mode,
                "counts": {to_symbolic(lam): str(c) for lam, c in items},
                "total": str(self.total),
            }
        )


# ---------------------------------------------------------------------------
# numba kernels
#
# A rank sequence (r_1, ..., r_(n-1)) determines the Jordan type, so kernels
# tally into an array indexed by sum(r_k * (n+1)**(k-1)) and Python decodes
# the keys afterwards.


@njit(cache=True, nogil=True)
def _rank_modp(a, n, q, inv):
    rank = 0
    for col in range(n):
        pivot = -1
        for r in range(rank, n):
            if a[r, col] != 0:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            for c in range(n):
                tmp = a[rank, c]
                a[rank, c] = a[pivot, c]
                a[pivot, c] = tmp
        piv_inv = inv[a[rank, col]]
        for c in range(n):
            a[rank, c] = a[rank, c] * piv_inv % q
        for r in range(n):
            if r != rank and a[r, col] != 0:
                f = a[r, col]
                for c in range(n):
                    a[r, c] = (a[r, c] - f * a[rank, c]) % q
        rank += 1
    return rank


@njit(cache=True, nogil=True)
def _rank_key_modp(entries, n, q, inv):
    """Encode (r_1, ..., r_(n-1)) of the matrix given by its entry vector."""
    a = np.zeros((n, n), dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            a[i, j] = entries[k]
            k += 1
    power = a.copy()
    key = 0
    base = 1
    for _ in range(n - 1):
        work = power.copy()
        r = _rank_modp(work, n, q, inv)
        key += r * base
        base *= n + 1
        nxt = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                if power[i, j] != 0:
                    for c in range(n):
                        nxt[i, c] = (nxt[i, c] + power[i, j] * a[j, c]) % q
        power = nxt
    return key


@njit(cache=True, nogil=True)
def _enumerate_chunk_modp(n, q, start, stop, inv):
    """Tally rank-sequence keys over entry vectors start..stop-1 (lex order)."""
    m = n * (n - 1) // 2
    size = 1
    for _ in range(n - 1):
        size *= n + 1
    counts = np.zeros(size, dtype=np.int64)
    entries = np.zeros(m, dtype=np.int64)
    for idx in range(start, stop):
        rem = idx
        for pos in range(m - 1, -1, -1):
            entries[pos] = rem % q
            rem //= q
        counts[_rank_key_modp(entries, n, q, inv)] += 1
    return counts


@njit(cache=True, nogil=True)
def _rank_key_gf2(rows, n):
    """Same as _rank_key_modp for q = 2, rows bit-packed into int64."""
    a = rows.copy()
    key = 0
    base = 1
    for _ in range(n - 1):
        work = a.copy()
        rank = 0
        for col in range(n):
            pivot = -1
            for r in range(rank, n):
                if (work[r] >> col) & 1:
                    pivot = r
                    break
            if pivot < 0:
                continue
            tmp = work[rank]
            work[rank] = work[pivot]
            work[pivot] = tmp
            for r in range(n):
                if r != rank and (work[r] >> col) & 1:
                    work[r] ^= work[rank]
            rank += 1
        key += rank * base
        base *= n + 1
        nxt = np.zeros(n, dtype=np.int64)
        for i in range(n):
            acc = 0
            for j in range(n):
                if (a[i] >> j) & 1:
                    acc ^= rows[j]
            nxt[i] = acc
        a = nxt
    return key


@njit(cache=True, nogil=True)
def _enumerate_chunk_gf2(n, start, stop):
    size = 1
    for _ in range(n - 1):
        size *= n + 1
    counts = np.zeros(size, dtype=np.int64)
    rows = np.zeros(n, dtype=np.int64)
    m = n * (n - 1) // 2
    for idx in range(start, stop):
        for i in range(n):
            rows[i] = 0
        pos = m - 1
        for i in range(n - 1, -1, -1):
            for j in range(n - 1, i, -1):
                if (idx >> (m - 1 - pos)) & 1:
                    rows[i] |= 1 << j
                pos -= 1
        counts[_rank_key_gf2(rows, n)] += 1
    return counts


@njit(cache=True, nogil=True)
def _classify_samples_modp(samples, n, q, inv):
    """Rank-sequence key of each sampled entry vector (keys, not a tally:
    the key space grows like (n+1)^(n-1) and sampling targets large n)."""
    keys = np.empty(samples.shape[0], dtype=np.int64)
    for t in range(samples.shape[0]):
        keys[t] = _rank_key_modp(samples[t], n, q, inv)
    return keys


def _inverse_table(q: int) -> np.ndarray:
    inv = np.zeros(q, dtype=np.int64)
    for x in range(1, q):
        inv[x] = pow(x, q - 2, q)
    return inv


def _decode_key(key: int, n: int) -> Partition:
    ranks = [n]
    for _ in range(n - 1):
        ranks.append(key % (n + 1))
        key //= n + 1
    # r_n and r_(n+1) vanish (the matrices are nilpotent of index <= n)
    ranks.extend([0, 0])
    parts: list[int] = []
    for k in range(1, len(ranks) - 1):
        blocks = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        parts.extend([k] * blocks)
    return Partition(sorted(parts, reverse=True))


def _tally_from_keys(counts: np.ndarray, n: int, q: int, mode: str, total: int) -> CountTally:
    tally = CountTally(n=n, q=q, mode=mode, total=total)
    for key in np.nonzero(counts)[0]:
        lam = _decode_key(int(key), n)
        tally.counts[lam] = tally.counts.get(lam, 0) + int(counts[key])
    return tally


def _chunk_bounds(total: int, workers: int) -> list[tuple[int, int]]:
    step = -(-total // workers) if workers > 0 else total
    bounds = []
    lo = 0
    while lo < total:
        hi = min(lo + step, total)
        bounds.append((lo, hi))
        lo = hi
    return bounds or [(0, 0)]


def enumerate_counts(
    n: int, q: int, workers: int = 1, budget: int = DEFAULT_BUDGET
) -> CountTally:
    """Exhaustive tally of Jordan types over all q^(n(n-1)/2) matrices.

    The entry-vector space is split into lexicographic chunks; per-chunk
    tallies merge by addition, so the result is identical for any worker
    count.
    """
    _require_prime(q)
    if n < 1:
        raise OracleError("n must be positive")
    space = q ** (n * (n - 1) // 2)
    if space > budget:
        raise BudgetError(f"enumeration needs {space} matrices, over the budget of {budget}")
    if n == 1:
        return CountTally(n=1, q=q, mode="exhaustive", counts={Partition([1]): 1}, total=1)
    inv = _inverse_table(q)
    bounds = _chunk_bounds(space, max(1, workers))
    if q == 2:
        jobs = [(lambda lo=lo, hi=hi: _enumerate_chunk_gf2(n, lo, hi)) for lo, hi in bounds]
    else:
        jobs = [(lambda lo=lo, hi=hi: _enumerate_chunk_modp(n, q, lo, hi, inv)) for lo, hi in bounds]
    if workers <= 1:
        partials = [job() for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda job: job(), jobs))
    counts = partials[0]
    for extra in partials[1:]:
        counts = counts + extra
    return _tally_from_keys(counts, n, q, "exhaustive", space)


def sample_counts(
    n: int, q: int, trials: int, seed: int, workers: int = 1
) -> CountTally:
    """Monte-Carlo tally over uniformly random matrices; total is trials.

    Worker w draws from the w-th child of SeedSequence(seed), so results are
    reproducible for a fixed (seed, workers) pair; worker counts merge by
    addition.
    """
    _require_prime(q)
    if n < 1:
        raise OracleError("n must be positive")
    if trials < 0:
        raise OracleError("trials must be nonnegative")
    tally = CountTally(n=n, q=q, mode="sample", total=trials)
    if trials == 0:
        return tally
    if n == 1:
        tally.counts[Partition([1])] = trials
        return tally
    m = n * (n - 1) // 2
    inv = _inverse_table(q)
    workers = max(1, workers)
    per = [trials // workers] * workers
    for w in range(trials % workers):
        per[w] += 1
    children = np.random.SeedSequence(seed).spawn(workers)
    batch = 1 << 20  # cap the materialized sample block
    keyed: dict[int, int] = {}
    for w in range(workers):
        if per[w] == 0:
            continue
        rng = np.random.default_rng(children[w])
        left = per[w]
        while left > 0:
            take = min(left, batch)
            samples = rng.integers(0, q, size=(take, m), dtype=np.int64)
            keys, counts = np.unique(_classify_samples_modp(samples, n, q, inv),
                                     return_counts=True)
            for key, c in zip(keys, counts):
                keyed[int(key)] = keyed.get(int(key), 0) + int(c)
            left -= take
    for key, c in keyed.items():
        lam = _decode_key(key, n)
        tally.counts[lam] = tally.counts.get(lam, 0) + c
    return tally
