import numpy as np
import pytest

from nilcount.counting import p_poly
from nilcount.oracle import (
    BudgetError,
    CountTally,
    OracleError,
    UTMatrix,
    enumerate_counts,
    jordan_type,
    matrix_rank,
    sample_counts,
)
from nilcount.partitions import Partition, partitions_of


def test_matrix_rank_basics():
    assert matrix_rank(np.zeros((4, 4), dtype=int), 3) == 0
    jordan = np.diag([1, 1, 1, 1], 1)
    assert matrix_rank(jordan, 2) == 4
    single = np.zeros((3, 3), dtype=int)
    single[0, 1] = 1
    assert matrix_rank(single, 2) == 1
    with pytest.raises(OracleError):
        matrix_rank(np.zeros((2, 2), dtype=int), 4)


def test_matrix_rank_matches_all_fields():
    rng = np.random.default_rng(0)
    for q in (2, 3, 5, 7):
        for _ in range(20):
            m = rng.integers(0, q, size=(4, 4))
            # reference: count pivots by fraction-free elimination in sympy-free way
            assert matrix_rank(m, q) == _slow_rank(m, q)


def _slow_rank(m, q):
    rows = [list(int(x) % q for x in row) for row in m]
    rank = 0
    for col in range(len(rows[0])):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], q - 2, q)
        rows[rank] = [(x * inv) % q for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(a - f * b) % q for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def test_ut_matrix_validation():
    UTMatrix(3, 2, (1, 0, 1))
    with pytest.raises(OracleError):
        UTMatrix(3, 2, (1, 0))
    with pytest.raises(OracleError):
        UTMatrix(3, 2, (2, 0, 0))
    with pytest.raises(OracleError):
        UTMatrix(3, 4, (0, 0, 0))


def test_jordan_type_examples():
    n = 5
    zero = UTMatrix(n, 3, (0,) * (n * (n - 1) // 2))
    assert jordan_type(zero).parts == (1,) * n
    # full superdiagonal: entries (i, i+1) are the 1st, (n-1)th, ... in row-major order
    entries = []
    for i in range(n):
        for j in range(i + 1, n):
            entries.append(1 if j == i + 1 else 0)
    assert jordan_type(UTMatrix(n, 3, tuple(entries))).parts == (n,)
    assert jordan_type(UTMatrix(3, 2, (1, 0, 0))).parts == (2, 1)


def test_jordan_type_conjugation_invariant():
    rng = np.random.default_rng(42)
    n, q = 5, 3
    m = n * (n - 1) // 2
    for _ in range(25):
        entries = tuple(int(x) for x in rng.integers(0, q, size=m))
        a = UTMatrix(n, q, entries)
        base = jordan_type(a)
        # conjugate by a random invertible upper-triangular matrix
        u = np.triu(rng.integers(0, q, size=(n, n)))
        np.fill_diagonal(u, rng.integers(1, q, size=n))
        u_inv = _triangular_inverse(u, q)
        b = (u @ a.to_array() % q) @ u_inv % q
        assert np.all(np.tril(b) == 0)
        b_entries = tuple(int(b[i, j]) for i in range(n) for j in range(i + 1, n))
        assert jordan_type(UTMatrix(n, q, b_entries)) == base


def _triangular_inverse(u, q):
    n = u.shape[0]
    inv = np.zeros_like(u)
    for col in range(n):
        e = np.zeros(n, dtype=u.dtype)
        e[col] = 1
        x = np.zeros(n, dtype=u.dtype)
        for i in range(n - 1, -1, -1):
            acc = (e[i] - int(u[i, i + 1 :] @ x[i + 1 :])) % q
            x[i] = acc * pow(int(u[i, i]), q - 2, q) % q
        inv[:, col] = x
    return inv


def test_enumerate_n3_q2():
    tally = enumerate_counts(3, 2)
    assert tally.total == 8
    assert tally.counts == {
        Partition((3,)): 2,
        Partition((2, 1)): 5,
        Partition((1, 1, 1)): 1,
    }


def test_enumerate_n2_q3():
    tally = enumerate_counts(2, 3)
    assert tally.counts == {Partition((2,)): 2, Partition((1, 1)): 1}


def test_enumerate_n1():
    assert enumerate_counts(1, 7).counts == {Partition((1,)): 1}


def test_enumerate_agrees_with_polynomials():
    for n in range(2, 5):
        for q in (2, 3):
            tally = enumerate_counts(n, q)
            assert sum(tally.counts.values()) == tally.total == q ** (n * (n - 1) // 2)
            for lam in partitions_of(n):
                assert tally.counts.get(lam, 0) == p_poly(lam)(q), (n, q, lam.parts)


def test_enumerate_errors():
    with pytest.raises(OracleError):
        enumerate_counts(3, 6)
    with pytest.raises(BudgetError):
        enumerate_counts(8, 2, budget=10**6)


def test_enumerate_worker_determinism():
    reference = enumerate_counts(4, 3, workers=1)
    for workers in (2, 8):
        assert enumerate_counts(4, 3, workers=workers).counts == reference.counts


def test_sample_reproducible_and_converging():
    trials = 100_000
    a = sample_counts(4, 2, trials, seed=0)
    b = sample_counts(4, 2, trials, seed=0)
    assert a.counts == b.counts
    assert a.mode == "sample" and a.total == trials
    # P(4) at q=2 is 8 of 64; allow 4 standard errors
    p = 8 / 64
    freq = a.counts[Partition((4,))] / trials
    assert abs(freq - p) <= 4 * (p * (1 - p) / trials) ** 0.5


def test_sample_zero_trials():
    tally = sample_counts(5, 3, 0, seed=1)
    assert tally.counts == {} and tally.total == 0


def test_sample_errors():
    with pytest.raises(OracleError):
        sample_counts(3, 9, 10, seed=0)
    with pytest.raises(OracleError):
        sample_counts(3, 2, -1, seed=0)


def test_tally_json():
    import json

    tally = enumerate_counts(3, 2)
    data = json.loads(tally.to_json())
    assert data == {
        "n": 3,
        "q": 2,
        "mode": "exhaustive",
        "counts": {"3": "2", "2 1": "5", "1^3": "1"},
        "total": "8",
    }
