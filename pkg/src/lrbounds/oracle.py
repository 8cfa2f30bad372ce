"""Exact Littlewood-Richardson coefficients by LR-tableau enumeration, and
the two extremal single-tableau constructions."""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

from .partitions import Partition, SkewShape, contains
from .tableaux import SkewTableau


def _reading_cells(shape: SkewShape) -> list[tuple[int, int]]:
    # rows top to bottom, each right to left: the reverse reading order
    return [(i, j) for i in range(shape.n_rows) for j in reversed(shape.row_span(i))]


def _search(shape: SkewShape, mu: Sequence[int] | None) -> Iterator[dict]:
    """Depth-first fill in reverse reading order.

    Each placement is checked against its right and upper neighbours (both
    already filled) and against the running lattice counts, so every leaf
    is an LR tableau.  With ``mu`` given, the label budget is ``mu``;
    otherwise every content is allowed.  Yields the live label dict; copy
    it before keeping it.
    """
    cells = _reading_cells(shape)
    n = len(cells)
    inner, outer = shape.inner, shape.outer
    labels: dict[tuple[int, int], int] = {}
    if mu is None:
        max_label = shape.n_rows
        budget = [n + 1] * (max_label + 2)
    else:
        max_label = len(mu)
        budget = [0] + list(mu) + [0]
    counts = [0] * (max_label + 2)
    counts[0] = n + 1  # label 1 is never limited by the lattice rule

    def rec(pos: int) -> Iterator[dict]:
        if pos == n:
            yield labels
            return
        i, j = cells[pos]
        hi = max_label
        if j + 1 < outer[i]:
            hi = min(hi, labels[(i, j + 1)])
        lo = 1
        if i > 0 and inner.part(i - 1) <= j < outer[i - 1]:
            lo = labels[(i - 1, j)] + 1
        for v in range(lo, hi + 1):
            if counts[v] >= budget[v] or counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            labels[(i, j)] = v
            yield from rec(pos + 1)
            counts[v] -= 1
        labels.pop((i, j), None)

    yield from rec(0)


def enumerate_lr_tableaux(shape: SkewShape, mu: Sequence[int]) -> list[SkewTableau]:
    mu = Partition(mu)
    if mu.size != shape.size:
        return []
    return [SkewTableau(dict(lab), shape) for lab in _search(shape, mu)]


def count_lr_tableaux(shape: SkewShape, mu: Sequence[int]) -> int:
    mu = Partition(mu)
    if mu.size != shape.size:
        return 0
    return sum(1 for _ in _search(shape, mu))


def lr_coefficient(gamma: Sequence[int], lam: Sequence[int], mu: Sequence[int]) -> int:
    gamma, lam, mu = Partition(gamma), Partition(lam), Partition(mu)
    if not contains(gamma, lam) or lam.size + mu.size != gamma.size:
        return 0
    return count_lr_tableaux(SkewShape(gamma, lam), mu)


def lr_expansion(shape: SkewShape) -> Counter:
    """content -> number of LR tableaux of ``shape``, over all contents.

    This is the full expansion of the skew shape in one search, which is
    what the census uses instead of one search per content.
    """
    out: Counter = Counter()
    for lab in _search(shape, None):
        c = Counter(lab.values())
        out[Partition(c[k] for k in range(1, len(c) + 1))] += 1
    return out


def minimal_content_tableau(shape: SkewShape) -> SkewTableau:
    """The LR tableau whose content is the sorted row sizes.

    Repeatedly: with ``k`` rows still holding cells and ``m`` the shortest
    of them, label the rightmost ``m`` free cells of the ``r``-th such row
    (top to bottom) by ``r``.  Each round lays down ``m`` columns of ballot
    sequences ``k, ..., 1``.
    """
    if shape.size == 0:
        raise ValueError("shape is empty")
    free = {i: list(shape.row_span(i)) for i in shape.nonempty_rows()}
    labels = {}
    while free:
        m = min(len(cols) for cols in free.values())
        for rank, i in enumerate(sorted(free), start=1):
            for j in free[i][-m:]:
                labels[(i, j)] = rank
            del free[i][-m:]
        free = {i: cols for i, cols in free.items() if cols}
    return SkewTableau(labels, shape)


def maximal_content_tableau(shape: SkewShape) -> SkewTableau:
    """Label every cell by its depth in its column (top cell = 1)."""
    if shape.size == 0:
        raise ValueError("shape is empty")
    top: dict[int, int] = {}
    labels = {}
    for i, j in shape.cells():
        top.setdefault(j, i)
        labels[(i, j)] = i - top[j] + 1
    return SkewTableau(labels, shape)
