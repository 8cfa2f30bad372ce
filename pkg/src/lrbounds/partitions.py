"""Partitions, skew shapes, cell regions and the dominance orders.

Cells are ``(row, col)`` pairs, 0-based internally.  Text and CLI
representations are 1-based; conversion happens only in the I/O helpers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

Cell = tuple[int, int]


class ContainmentError(ValueError):
    """Raised when an inner partition does not fit inside an outer one."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((3, 1, 0))``
    equals ``Partition((3, 1))``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"not weakly decreasing: {tuple(parts)}")
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {tuple(parts)}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def tail(self, j: int) -> "Partition":
        """Drop the first ``j`` parts."""
        return Partition(self[j:])

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,2"``; the empty string is the empty partition."""
    text = text.strip().strip("()")
    if not text:
        return EMPTY
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    return Partition(parts)


def format_partition(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def transpose(p: Sequence[int]) -> Partition:
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def gdom_le(a: Sequence[int], b: Sequence[int]) -> bool:
    """Generalized dominance: prefix sums of ``a`` bounded by those of ``b``
    up to the shorter length.  Vacuously true when either is empty."""
    return all(x <= y for x, y in zip(accumulate(a), accumulate(b)))


def dom_le(a: Sequence[int], b: Sequence[int]) -> bool:
    if sum(a) != sum(b):
        raise ValueError(f"dominance order needs equal sizes, got {sum(a)} and {sum(b)}")
    return gdom_le(a, b)


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram ``outer/inner``; row ``i`` spans columns
    ``inner[i] .. outer[i]-1``."""

    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ContainmentError(
                f"({format_partition(self.inner)}) is not contained in ({format_partition(self.outer)})"
            )

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_span(self, i: int) -> range:
        return range(self.inner.part(i), self.outer.part(i))

    def row_sizes(self) -> tuple[int, ...]:
        return tuple(self.outer[i] - self.inner.part(i) for i in range(self.n_rows))

    def nonempty_rows(self) -> list[int]:
        return [i for i, r in enumerate(self.row_sizes()) if r > 0]

    def cells(self) -> Iterator[Cell]:
        """Cells in row-major order, left to right."""
        for i in range(self.n_rows):
            for j in self.row_span(i):
                yield (i, j)

    def transpose(self) -> "SkewShape":
        return SkewShape(transpose(self.outer), transpose(self.inner))

    def without_rows(self, rows: Iterable[int]) -> "SkewShape":
        """Delete the given (0-based) rows and stack the rest vertically.

        Each remaining cell keeps its column, so the result is again a
        skew shape: both boundaries just lose entries.
        """
        drop = set(rows)
        bad = [i for i in drop if not 0 <= i < self.n_rows]
        if bad:
            raise IndexError(f"row index out of range: {sorted(bad)}")
        keep = [i for i in range(self.n_rows) if i not in drop]
        return SkewShape(
            Partition(self.outer[i] for i in keep),
            Partition(self.inner.part(i) for i in keep),
        )

    def __str__(self) -> str:
        return f"({format_partition(self.outer)})/({format_partition(self.inner)})"


def skew(gamma: Sequence[int], lam: Sequence[int] = ()) -> SkewShape:
    return SkewShape(Partition(gamma), Partition(lam))


@dataclass(frozen=True)
class CellRegion:
    """An arbitrary finite set of cells, not necessarily a skew diagram."""

    cells: frozenset[Cell] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", frozenset(self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def row_sizes(self) -> Counter:
        return Counter(i for i, _ in self.cells)

    def column_sizes(self) -> Counter:
        return Counter(j for _, j in self.cells)

    def transpose(self) -> "CellRegion":
        return CellRegion(frozenset((j, i) for i, j in self.cells))

    def issubset(self, other: "CellRegion") -> bool:
        return self.cells <= other.cells


def region_of(shape: SkewShape) -> CellRegion:
    return CellRegion(frozenset(shape.cells()))


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``,
    in lexicographic order of their part tuples (so ``()`` comes first)."""
    out: list[Partition] = []

    def rec(prefix: list[int], bound: int) -> None:
        out.append(Partition(prefix))
        if len(prefix) == rows:
            return
        for x in range(1, bound + 1):
            prefix.append(x)
            rec(prefix, x)
            prefix.pop()

    rec([], cols)
    return out


def subpartitions(p: Sequence[int]) -> list[Partition]:
    """All partitions contained in ``p`` (including ``()`` and ``p``)."""
    out: list[Partition] = []

    def rec(prefix: list[int]) -> None:
        out.append(Partition(prefix))
        i = len(prefix)
        if i == len(p):
            return
        bound = min(p[i], prefix[-1]) if prefix else p[i]
        for x in range(1, bound + 1):
            prefix.append(x)
            rec(prefix)
            prefix.pop()

    rec([])
    return out
