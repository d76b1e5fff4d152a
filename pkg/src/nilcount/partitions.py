"""Integer partitions and Young-diagram combinatorics.

A partition is a weakly decreasing sequence of positive integers. The empty
partition (of 0) is a first-class value; several recursions bottom out there.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence


class PartitionError(ValueError):
    """Invalid partition data or a malformed symbolic string."""


@dataclass(frozen=True)
class RemovableCell:
    """An outer corner of a Young diagram, in (row, column) coordinates.

    Cells of one diagram are indexed 1..s with rows strictly increasing and
    columns strictly decreasing.
    """

    row: int
    col: int
    index: int


class Partition:
    """Weakly decreasing sequence of positive integers."""

    __slots__ = ("parts", "n")

    parts: tuple[int, ...]
    n: int

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p <= 0:
                raise PartitionError(f"part #{i + 1} is {p!r}; parts must be positive integers")
            if i > 0 and parts[i - 1] < p:
                raise PartitionError(
                    f"parts must be weakly decreasing, got {parts[i - 1]} before {p} "
                    "(use Partition.lenient to sort)"
                )
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def lenient(cls, parts: Sequence[int]) -> "Partition":
        """Build from positive integers in any order (sorted descending)."""
        return cls(sorted(parts, reverse=True))

    @property
    def length(self) -> int:
        """Number of parts (the paper's N)."""
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    # -- diagram combinatorics -------------------------------------------

    def dual(self) -> "Partition":
        """Conjugate partition: column heights of the Young diagram."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def multiplicities(self) -> tuple[int, ...]:
        """Count of each part value, 1-indexed by value, zeros retained.

        Entry k-1 is the number of parts equal to k, for k = 1..largest part.
        """
        if not self.parts:
            return ()
        alpha = [0] * self.parts[0]
        for p in self.parts:
            alpha[p - 1] += 1
        return tuple(alpha)

    def removable_cells(self) -> list[RemovableCell]:
        """Outer corners, ordered by increasing row (decreasing column)."""
        if not self.parts:
            raise PartitionError("empty partition has no removable cells")
        cells = []
        for i, p in enumerate(self.parts):
            # last row of a horizontal strip of equal-length rows
            if i + 1 == len(self.parts) or self.parts[i + 1] < p:
                cells.append(RemovableCell(row=i + 1, col=p, index=len(cells) + 1))
        return cells

    def remove_cell(self, j: int) -> "Partition":
        """Partition left after deleting the j-th removable cell (1-based)."""
        cells = self.removable_cells()
        if not 1 <= j <= len(cells):
            raise PartitionError(f"removable-cell index {j} out of range 1..{len(cells)}")
        row = cells[j - 1].row
        parts = list(self.parts)
        parts[row - 1] -= 1
        if parts[row - 1] == 0:
            parts.pop(row - 1)
        return Partition(parts)

    def extend_ones(self, k: int) -> "Partition":
        """Append k parts equal to 1."""
        if k < 0:
            raise PartitionError("cannot append a negative number of 1-parts")
        return Partition(self.parts + (1,) * k)

    def strip_ones(self) -> "Partition":
        """Drop every part equal to 1."""
        return Partition(tuple(p for p in self.parts if p > 1))


def from_parts(parts: Sequence[int]) -> Partition:
    """Strict constructor; rejects non-monotone input."""
    return Partition(parts)


_FACTOR_RE = re.compile(r"(\d+)(?:\^(\d+))?$")


def parse_symbolic(text: str) -> Partition:
    """Parse symbolic partition notation.

    Two forms are accepted:
      * factors ``value^multiplicity`` separated by spaces, in any order,
        with ``^1`` omissible ("1^2 2^2 3^3 5^2", "2^2 5 7 9");
      * a digit run where every character is one single-digit part ("321").
    A multi-character string of digits 1 to 9 is always read as a digit run,
    so a part of 10 or more needs the factor form (the digit 0 cannot start
    a part, which keeps "10" unambiguous).
    """
    text = text.strip()
    if text == "":
        return Partition()
    if len(text) > 1 and all(c in "123456789" for c in text):
        return Partition.lenient([int(c) for c in text])
    counts: dict[int, int] = {}
    pos = 0
    for token in text.split(" "):
        if token:
            m = _FACTOR_RE.match(token)
            if m is None:
                raise PartitionError(f"malformed factor {token!r} at position {pos}")
            value = int(m.group(1))
            if value == 0:
                raise PartitionError(f"part value 0 at position {pos}")
            if m.group(2) is None:
                mult = 1
            else:
                mult = int(m.group(2))
                if mult == 0:
                    raise PartitionError(f"explicit zero exponent at position {pos}")
            counts[value] = counts.get(value, 0) + mult
        pos += len(token) + 1
    parts: list[int] = []
    for value in sorted(counts, reverse=True):
        parts.extend([value] * counts[value])
    return Partition(parts)


def to_symbolic(p: Partition, ascending: bool = False) -> str:
    """Canonical space-separated factor form; round-trips through parse."""
    alpha = p.multiplicities()
    items = [(v, m) for v, m in enumerate(alpha, start=1) if m]
    if not ascending:
        items.reverse()
    out = " ".join(str(v) if m == 1 else f"{v}^{m}" for v, m in items)
    if len(out) > 1 and all(c in "123456789" for c in out):
        # a lone multi-digit part would re-parse as a digit run
        out += "^1"
    return out


def to_compact_symbolic(p: Partition) -> str:
    """Concatenated descending form used by the printed table ("2^21^2")."""
    alpha = p.multiplicities()
    items = [(v, m) for v, m in enumerate(alpha, start=1) if m]
    items.reverse()
    return "".join(str(v) if m == 1 else f"{v}^{m}" for v, m in items)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise PartitionError("n must be nonnegative")
    yield from (Partition(parts) for parts in _partition_tuples(n, max_part or n))


def _partition_tuples(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            yield (first,) + rest


@functools.lru_cache(maxsize=None)
def _dim_irrep(parts: tuple[int, ...]) -> int:
    if parts == (1,):
        return 1
    p = Partition(parts)
    return sum(_dim_irrep(p.remove_cell(j).parts) for j in range(1, len(p.removable_cells()) + 1))


def dim_irrep(p: Partition) -> int:
    """Dimension of the symmetric-group irreducible indexed by p.

    Computed by the branching recursion over removable cells; lru_cache makes
    concurrent duplicate computation benign (values are idempotent).
    """
    if not p.parts:
        raise PartitionError("empty partition has no associated irreducible")
    return _dim_irrep(p.parts)
