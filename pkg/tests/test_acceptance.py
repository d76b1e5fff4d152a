"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (visible with pytest -s)."""

import math
import time
from importlib import resources
from math import comb

from nilcount.cli import render_table_text
from nilcount.counting import (
    d_exponent,
    deg_p,
    deg_r,
    e_exponent,
    p_poly,
    r_poly,
)
from nilcount.oracle import enumerate_counts
from nilcount.partitions import Partition, dim_irrep, partitions_of
from nilcount.polynomial import IntPolynomial, TruncatedSeries, factor_out
from nilcount.stabilization import limit_series


def _report(name: str, ok: bool, detail: str = "") -> None:
    print(f"{'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail else ""))
    assert ok, name


def test_criterion_1_appendix_reproduction():
    golden = (resources.files("nilcount") / "data" / "appendix_table.txt").read_text()
    start = time.monotonic()
    table = render_table_text(10)
    elapsed = time.monotonic() - start
    assert len(golden.splitlines()) == 138
    _report(
        "criterion 1: table up to n=10 matches the golden file",
        table == golden,
        f"138 rows in {elapsed:.2f}s",
    )


def test_criterion_2_sum_identity():
    ok = True
    for n in range(1, 13):
        total = IntPolynomial()
        for lam in partitions_of(n):
            total = total + p_poly(lam)
        ok = ok and total == IntPolynomial([1]).shift(comb(n, 2))
    _report("criterion 2: counts sum to q^(n(n-1)/2) for n <= 12", ok)


def test_criterion_3_oracle_equivalence():
    cases = [(n, q) for n in range(1, 6) for q in (2, 3, 5)] + [(6, 2)]
    ok = True
    for n, q in cases:
        tally = enumerate_counts(n, q, workers=4)
        ok = ok and sum(tally.counts.values()) == q ** comb(n, 2)
        for lam in partitions_of(n):
            ok = ok and tally.counts.get(lam, 0) == p_poly(lam)(q)
    spot = enumerate_counts(3, 2)
    ok = ok and spot.counts == {
        Partition((3,)): 2,
        Partition((2, 1)): 5,
        Partition((1, 1, 1)): 1,
    }
    _report("criterion 3: exhaustive enumeration matches the polynomials", ok, "n<=5 q=2,3,5; n=6 q=2")


def test_criterion_4_dual_recursion_agreement():
    ok = True
    for n in range(1, 13):
        for lam in partitions_of(n):
            d, e, r = factor_out(p_poly(lam))
            ok = ok and r == r_poly(lam)
            ok = ok and d == d_exponent(lam)
            ok = ok and e == e_exponent(lam)
    _report("criterion 4: R recursion and d/e formulas match the factorization, n <= 12", ok)


def test_criterion_5_degrees_and_coefficients():
    ok = True
    for n in range(1, 13):
        for lam in partitions_of(n):
            p = p_poly(lam)
            r = r_poly(lam)
            ok = ok and p.degree == deg_p(lam)
            ok = ok and r.degree == deg_r(lam)
            ok = ok and p.coeffs[-1] == dim_irrep(lam)
            ok = ok and r[0] == 1
            ok = ok and all(c > 0 for c in r.coeffs)
    _report("criterion 5: degree, leading-coefficient and positivity checks, n <= 12", ok)


def test_criterion_6_stabilization():
    ok = True
    # divisibility of R(lam + 1-part) - R(lam) by q^(alpha_1 + 1), n <= 9
    for n in range(1, 10):
        for lam in partitions_of(n):
            alpha1 = sum(1 for part in lam.parts if part == 1)
            diff = r_poly(lam.extend_ones(1)) - r_poly(lam)
            ok = ok and all(diff[k] == 0 for k in range(alpha1 + 1))
    # limit prefixes match R(lam + k ones) through degree alpha_1
    for n in range(0, 8):
        for lam in partitions_of(n):
            lim = limit_series(lam, 14)
            for k in range(0, 4):
                ext = lam.extend_ones(k)
                alpha1 = sum(1 for part in ext.parts if part == 1)
                r = r_poly(ext)
                upto = min(alpha1 + 1, len(r.coeffs), 15)
                ok = ok and r.coeffs[:upto] == lim.coeffs[:upto]
    # closed forms for rectangles and staircases, N <= 4, k <= 4
    order = 10
    for big in range(2, 5):
        for k in range(1, 5):
            denom = TruncatedSeries([1], order)
            for _ in range((big - 1) * k + 1):
                denom = denom * TruncatedSeries([1, -1], order)
            for i in range(2, k + 1):
                denom = denom * TruncatedSeries([1] + [0] * (i - 1) + [-1], order)
            ok = ok and limit_series(Partition((big,) * k), order) == denom.invert()
        denom = TruncatedSeries([1], order)
        for _ in range(big * big - 1):
            denom = denom * TruncatedSeries([1, -1], order)
        for _ in range(big - 1):
            denom = denom * TruncatedSeries([1, 0, -1], order)
        staircase = []
        for v in range(big, 1, -1):
            staircase.extend([v, v])
        ok = ok and limit_series(Partition(staircase), order) == denom.invert()
    # spot value: base 2^2 and the n=10 table row agree through q^6
    lim = limit_series(Partition((2, 2)), 6)
    ok = ok and lim.coeffs == (1, 3, 7, 13, 22, 34, 50)
    ok = ok and r_poly(Partition((2, 2, 1, 1, 1, 1, 1, 1))).coeffs[:7] == lim.coeffs
    _report("criterion 6: stabilization and limit-series checks", ok)


def test_criterion_7_dimension_identity():
    ok = all(
        sum(dim_irrep(lam) ** 2 for lam in partitions_of(n)) == math.factorial(n)
        for n in range(1, 9)
    )
    _report("criterion 7: squared dimensions sum to n! for n <= 8", ok)


def test_criterion_8_parallel_determinism():
    table_ref = render_table_text(8, workers=1)
    ok = all(render_table_text(8, workers=w) == table_ref for w in (2, 8))
    for n, q in ((5, 3), (6, 2)):
        ref = enumerate_counts(n, q, workers=1)
        for w in (2, 8):
            got = enumerate_counts(n, q, workers=w)
            ok = ok and got.counts == ref.counts and got.total == ref.total
    _report("criterion 8: identical output for 1, 2 and 8 workers", ok)
