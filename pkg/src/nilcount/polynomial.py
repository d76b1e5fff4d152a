"""Exact dense polynomials and truncated power series in q.

Coefficients are Python ints, so arithmetic is exact at any size. The dense
representation suits this problem: the table polynomials are dense and of
modest degree.
"""

from __future__ import annotations

from typing import Sequence


class PolynomialError(ValueError):
    pass


class IntPolynomial:
    """Dense polynomial with integer coefficients; coeffs[k] is the q^k term.

    Immutable, normalized (no trailing zeros); the zero polynomial has an
    empty coefficient tuple and degree None.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def shift(self, m: int) -> "IntPolynomial":
        """Multiply by q^m."""
        if m < 0:
            raise PolynomialError("shift amount must be nonnegative")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * m + self.coeffs)

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value


IntPolynomial.ZERO = IntPolynomial()  # type: ignore[attr-defined]
IntPolynomial.ONE = IntPolynomial([1])  # type: ignore[attr-defined]
IntPolynomial.Q_MINUS_1 = IntPolynomial([-1, 1])  # type: ignore[attr-defined]


def geometric_sum(t: int) -> IntPolynomial:
    """1 + q + ... + q^t."""
    if t < 0:
        raise PolynomialError("geometric_sum needs t >= 0")
    return IntPolynomial([1] * (t + 1))


def factor_out(a: IntPolynomial) -> tuple[int, int, IntPolynomial]:
    """Write a = q^d (q-1)^e r with r(0) != 0 and r(1) != 0.

    d is read off the leading zero coefficients; e by repeated synthetic
    division by q-1 while the value at 1 vanishes. All integer arithmetic.
    """
    if a.is_zero():
        raise PolynomialError("cannot factor the zero polynomial")
    coeffs = list(a.coeffs)
    d = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        d += 1
    e = 0
    while sum(coeffs) == 0 and len(coeffs) > 1:
        # synthetic division by (q - 1): quotient coefficients top-down
        quot = [0] * (len(coeffs) - 1)
        carry = 0
        for k in range(len(coeffs) - 1, 0, -1):
            carry += coeffs[k]
            quot[k - 1] = carry
        coeffs = quot
        e += 1
    return d, e, IntPolynomial(coeffs)


class TruncatedSeries:
    """Power-series coefficients through a fixed order M.

    Mixing different orders in one operation is an error: silent truncation
    would mask test failures.
    """

    __slots__ = ("order", "coeffs")

    order: int
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int], order: int | None = None):
        coeffs = tuple(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise PolynomialError("series order must be nonnegative")
        if len(coeffs) > order + 1:
            raise PolynomialError(f"{len(coeffs)} coefficients exceed order {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs + (0,) * (order + 1 - len(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)}, order={self.order})"

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise PolynomialError(f"mismatched series orders {self.order} and {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        out = [0] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.order + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, self.order)

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires constant term +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise PolynomialError(f"cannot invert series with constant term {c0}")
        inv = [c0] + [0] * self.order
        for k in range(1, self.order + 1):
            acc = sum(self.coeffs[i] * inv[k - i] for i in range(1, k + 1))
            inv[k] = -c0 * acc
        return TruncatedSeries(inv, self.order)


def series_from_poly(a: IntPolynomial, order: int) -> TruncatedSeries:
    """Truncate a polynomial to a series of the given order."""
    return TruncatedSeries(a.coeffs[: order + 1], order)


def coeffs_to_strings(coeffs: Sequence[int]) -> list[str]:
    """JSON-safe form: decimal strings, preserving unbounded integers."""
    return [str(c) for c in coeffs]


def coeffs_from_strings(strings: Sequence[str]) -> tuple[int, ...]:
    return tuple(int(s) for s in strings)


def bracketed(coeffs: Sequence[int]) -> str:
    """Table rendering: [c0,c1,...]."""
    return "[" + ",".join(str(c) for c in coeffs) + "]"
