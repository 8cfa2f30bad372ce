"""Standardizations of cell regions and the lower/upper derivations of a
skew shape."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .partitions import CellRegion, Partition, SkewShape, region_of, transpose


def left_top_standardization(region: CellRegion) -> Partition:
    """Row sizes sorted into a partition."""
    return Partition(sorted(region.row_sizes().values(), reverse=True))


def top_left_standardization(region: CellRegion) -> Partition:
    """Transpose of the sorted column sizes."""
    return transpose(sorted(region.column_sizes().values(), reverse=True))


def truncate_columns(shape: SkewShape, i: int) -> CellRegion:
    """Drop the top ``i`` cells of every column of the skew diagram.

    Depth is counted among cells of the diagram only; skew columns are
    contiguous, so this is the cells at row >= (top of column) + i.
    """
    if i < 0:
        raise ValueError("i must be non-negative")
    top: dict[int, int] = {}
    for r, c in shape.cells():
        top.setdefault(c, r)
    return CellRegion(frozenset((r, c) for r, c in shape.cells() if r - top[c] >= i))


def _check_rows(shape: SkewShape, rows: Sequence[int]) -> tuple[int, ...]:
    rows = tuple(rows)
    if any(b <= a for a, b in zip(rows, rows[1:])):
        raise ValueError(f"row indices must be strictly increasing: {rows}")
    if rows and not (1 <= rows[0] and rows[-1] <= shape.n_rows):
        raise IndexError(f"row indices {rows} outside 1..{shape.n_rows}")
    return rows


def delete_rows(shape: SkewShape, rows: Sequence[int]) -> CellRegion:
    """Remove the 1-based ``rows`` and stack the remaining rows vertically,
    keeping every cell's column."""
    rows = _check_rows(shape, rows)
    return region_of(shape.without_rows(r - 1 for r in rows))


def lower_derivation(shape: SkewShape, i: int) -> Partition:
    return left_top_standardization(truncate_columns(shape, i))


def upper_derivation(shape: SkewShape, rows: Sequence[int] = ()) -> Partition:
    return top_left_standardization(delete_rows(shape, rows))


@lru_cache(maxsize=65536)
def lower_ladder(shape: SkewShape) -> tuple[Partition, ...]:
    """``lower_derivation(shape, i)`` for i = 0, 1, ... up to and including
    the first empty one."""
    out = []
    i = 0
    while True:
        d = lower_derivation(shape, i)
        out.append(d)
        if not d:
            return tuple(out)
        i += 1


def row_subsets(shape: SkewShape, max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """Strictly increasing 1-based row sequences over the nonempty rows,
    by length and then lexicographically.  Includes the empty sequence.

    Deleting an empty row never tightens an upper bound, so empty rows are
    skipped.
    """
    rows = [i + 1 for i in shape.nonempty_rows()]
    top = len(rows) if max_size is None else min(max_size, len(rows))
    for j in range(top + 1):
        yield from combinations(rows, j)


@lru_cache(maxsize=65536)
def upper_table(shape: SkewShape, max_size: int | None = None) -> tuple[tuple[tuple[int, ...], Partition], ...]:
    """All (row sequence, upper derivation) pairs used by the filter."""
    return tuple((rows, upper_derivation(shape, rows)) for rows in row_subsets(shape, max_size))

