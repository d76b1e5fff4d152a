"""Jordan-type counting polynomials and their q / (q-1) factorization.

P(lam) counts strictly upper-triangular n x n matrices over F_q of Jordan
type lam, as an exact polynomial in q. It factors as q^d * (q-1)^e * R with
R(0) = 1 and R(1) != 0; d, e and the degrees have closed forms, and R has
its own recursion. Every assembled result is cross-checked against the
factorization of P, so a bug in any one route fails loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .partitions import Partition, PartitionError, dim_irrep, partitions_of
from .polynomial import IntPolynomial, factor_out, geometric_sum


class ConsistencyError(AssertionError):
    """A closed formula disagreed with the recursion it must match."""


# Shared memo store; separate namespaces for the two recursions. Plain dicts
# are safe under the GIL; a racing duplicate insert writes an equal value.
_P_CACHE: dict[tuple[int, ...], IntPolynomial] = {}
_R_CACHE: dict[tuple[int, ...], IntPolynomial] = {}


def clear_caches() -> None:
    _P_CACHE.clear()
    _R_CACHE.clear()


def p_poly(lam: Partition) -> IntPolynomial:
    """Count polynomial P(lam), by recursion over removable cells.

    Each removable cell (i, c) of lam contributes
    (q^(n - dual_c) - q^(n - 1 - dual_(c-1))) * P(lam minus that cell),
    with the second power omitted when c = 1. The empty partition gives 1.
    """
    cached = _P_CACHE.get(lam.parts)
    if cached is not None:
        return cached
    if not lam.parts:
        result = IntPolynomial.ONE
    else:
        n = lam.n
        dual = lam.dual().parts
        result = IntPolynomial.ZERO
        for cell in lam.removable_cells():
            c = cell.col
            factor = IntPolynomial.ONE.shift(n - dual[c - 1])
            if c > 1:
                factor = factor - IntPolynomial.ONE.shift(n - 1 - dual[c - 2])
            result = result + factor * p_poly(lam.remove_cell(cell.index))
    _P_CACHE[lam.parts] = result
    return result


def r_poly(lam: Partition) -> IntPolynomial:
    """Reduced polynomial R(lam), by its own recursion.

    Each removable cell (i, c) contributes
    q^(dual_(c+1)) * (1 + q + ... + q^(mult of part value c-1)) * R(lam minus
    that cell), where dual_(c+1) is 0 past the last column and the geometric
    factor is 1 when c = 1. Independent of p_poly so the two can cross-check.
    """
    cached = _R_CACHE.get(lam.parts)
    if cached is not None:
        return cached
    if not lam.parts:
        result = IntPolynomial.ONE
    else:
        dual = lam.dual().parts
        alpha = lam.multiplicities()
        result = IntPolynomial.ZERO
        for cell in lam.removable_cells():
            c = cell.col
            shift = dual[c] if c < len(dual) else 0
            t = alpha[c - 2] if c > 1 else 0
            term = geometric_sum(t).shift(shift) * r_poly(lam.remove_cell(cell.index))
            result = result + term
    _R_CACHE[lam.parts] = result
    return result


def e_exponent(lam: Partition) -> int:
    """Multiplicity of q-1 in P(lam): number of cells minus number of rows."""
    if not lam.parts:
        raise PartitionError("e is defined for nonempty partitions")
    return lam.n - lam.length


def d_exponent(lam: Partition) -> int:
    """Multiplicity of q in P(lam): C(n,2) - C(N,2) - sum of adjacent dual products."""
    if not lam.parts:
        raise PartitionError("d is defined for nonempty partitions")
    dual = lam.dual().parts
    adjacent = sum(dual[i] * dual[i + 1] for i in range(len(dual) - 1))
    return comb(lam.n, 2) - comb(lam.length, 2) - adjacent


def deg_p(lam: Partition) -> int:
    """Degree of P(lam): sum of products of distinct dual parts."""
    if not lam.parts:
        raise PartitionError("deg P is defined for nonempty partitions")
    dual = lam.dual().parts
    total = 0
    for i in range(len(dual)):
        for j in range(i + 1, len(dual)):
            total += dual[i] * dual[j]
    return total


def deg_r(lam: Partition) -> int:
    """Degree of R(lam): adjacent dual products minus binomials of dual tails."""
    if not lam.parts:
        raise PartitionError("deg R is defined for nonempty partitions")
    dual = lam.dual().parts
    adjacent = sum(dual[i] * dual[i + 1] for i in range(len(dual) - 1))
    return adjacent - sum(comb(dual[i] + 1, 2) for i in range(1, len(dual)))


@dataclass(frozen=True)
class FactoredCount:
    """P(lam) together with its factorization q^d (q-1)^e R."""

    lam: Partition
    d: int
    e: int
    r: IntPolynomial
    p: IntPolynomial

    @property
    def prefix(self) -> str:
        """Minimal rendering of the q^d (q-1)^e part, (q-1) printed as Q."""
        pieces = []
        if self.d == 1:
            pieces.append("q")
        elif self.d > 1:
            pieces.append(f"q^{self.d}")
        if self.e == 1:
            pieces.append("Q")
        elif self.e > 1:
            pieces.append(f"Q^{self.e}")
        return "".join(pieces) or "1"


def factored_count(lam: Partition) -> FactoredCount:
    """Assemble the factored count, verifying every route against the others.

    The recursion for R, the closed formulas for d, e and both degrees, the
    branching dimension and the direct factorization of P must all agree;
    any mismatch raises ConsistencyError naming the failed check.
    """
    if not lam.parts:
        raise PartitionError("factored_count is defined for nonempty partitions")
    p = p_poly(lam)
    d, e, r_from_p = factor_out(p)
    r = r_poly(lam)

    def _require(ok: bool, what: str, got: object, want: object) -> None:
        if not ok:
            raise ConsistencyError(f"{what} mismatch for {lam!r}: {got!r} != {want!r}")

    _require(r == r_from_p, "R recursion vs factorization", r, r_from_p)
    _require(d == d_exponent(lam), "d formula", d_exponent(lam), d)
    _require(e == e_exponent(lam), "e formula", e_exponent(lam), e)
    _require(p.degree == deg_p(lam), "deg P formula", deg_p(lam), p.degree)
    _require(r.degree == deg_r(lam), "deg R formula", deg_r(lam), r.degree)
    _require(r[0] == 1, "constant term of R", r[0], 1)
    _require(all(c > 0 for c in r.coeffs), "positivity of R", list(r.coeffs), "positive")
    lead = p.coeffs[-1]
    _require(lead == dim_irrep(lam), "leading coefficient vs dimension", lead, dim_irrep(lam))
    return FactoredCount(lam=lam, d=d, e=e, r=r, p=p)


def sum_identity_holds(n: int) -> bool:
    """Whether the counts over all types of n sum to q^(n(n-1)/2)."""
    total = IntPolynomial.ZERO
    for lam in partitions_of(n):
        total = total + p_poly(lam)
    return total == IntPolynomial.ONE.shift(comb(n, 2))
