"""Stabilization of the reduced polynomials under appending 1-parts.

Appending a 1-part to lam leaves the low-order coefficients of R unchanged
(through degree alpha_1, the current number of 1-parts), so the sequence
R(lam), R(lam + 1), R(lam + 1 + 1), ... converges coefficientwise to a power
series with an explicit product-form denominator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .counting import r_poly
from .partitions import Partition, to_symbolic
from .polynomial import IntPolynomial, TruncatedSeries, coeffs_to_strings, series_from_poly


def s_factor(k: int, order: int) -> TruncatedSeries:
    """(1-q)(1-q^2)...(1-q^k) truncated; k = 0 gives the constant series 1."""
    result = TruncatedSeries([1], order)
    for i in range(1, k + 1):
        factor = series_from_poly(IntPolynomial([1] + [0] * (i - 1) + [-1]), order)
        result = result * factor
    return result


def limit_series(lam: Partition, order: int) -> TruncatedSeries:
    """Limit of R(lam + k ones) as k grows, truncated to the given order.

    1-parts of lam are stripped first (the limit does not depend on them).
    For the stripped partition with n cells, N rows and part-value
    multiplicities alpha, the series is the inverse of
    (1-q)^(n-N) * prod over part values v >= 2 of s_factor(alpha_v).
    """
    stripped = lam.strip_ones()
    denom = s_factor(1, order)  # 1 - q, to be raised to n - N
    one = TruncatedSeries([1], order)
    acc = one
    for _ in range(stripped.n - stripped.length):
        acc = acc * denom
    alpha = stripped.multiplicities()
    for v in range(2, len(alpha) + 1):
        if alpha[v - 1]:
            acc = acc * s_factor(alpha[v - 1], order)
    return acc.invert()


def _low_agreement(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    count = 0
    for x, y in zip(a, b):
        if x != y:
            break
        count += 1
    return count


@dataclass(frozen=True)
class StabilizationReport:
    """Outcome of comparing R(lam + k ones) across k and against the limit."""

    lam: Partition
    k_range: tuple[int, ...]
    agreement_orders: tuple[int, ...]
    limit: TruncatedSeries
    passed: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "lambda": to_symbolic(self.lam),
                "k_range": list(self.k_range),
                "agreement_orders": list(self.agreement_orders),
                "limit_order": self.limit.order,
                "limit_coeffs": coeffs_to_strings(self.limit.coeffs),
                "pass": self.passed,
            }
        )


def verify_stabilization(lam: Partition, k_max: int, order: int) -> StabilizationReport:
    """Check stabilization of R(lam + k ones) for k = 0..k_max.

    For each consecutive pair the difference must vanish through degree
    alpha_1(lam + k ones), and the same low coefficients must match the limit
    series. agreement_orders[k] records how many low-order coefficients the
    pair at (k, k+1) actually shares.
    """
    if k_max < 1:
        raise ValueError("k_max must be positive")
    limit = limit_series(lam, order)
    polys = [r_poly(lam.extend_ones(k)) for k in range(k_max + 1)]
    agreement = []
    passed = True
    for k in range(k_max):
        current = lam.extend_ones(k)
        alpha1 = sum(1 for p in current.parts if p == 1)
        width = max(len(polys[k].coeffs), len(polys[k + 1].coeffs), alpha1 + 1, order + 1)
        a = polys[k].coeffs + (0,) * (width - len(polys[k].coeffs))
        b = polys[k + 1].coeffs + (0,) * (width - len(polys[k + 1].coeffs))
        agree = _low_agreement(a, b)
        agreement.append(agree)
        if agree < alpha1 + 1:
            passed = False
        # stabilized prefix must also be the limit's prefix
        stable = min(alpha1 + 1, order + 1, len(polys[k].coeffs))
        if polys[k].coeffs[:stable] != limit.coeffs[:stable]:
            passed = False
    return StabilizationReport(
        lam=lam,
        k_range=tuple(range(k_max + 1)),
        agreement_orders=tuple(agreement),
        limit=limit,
        passed=passed,
    )
