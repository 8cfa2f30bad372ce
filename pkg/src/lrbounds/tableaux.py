"""Skew tableaux, reverse reading words and the Littlewood-Richardson test."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Mapping, Sequence

from .partitions import Cell, CellRegion, Partition, SkewShape, region_of

Word = tuple[int, ...]


class SkewTableau:
    """A labelling of a set of cells by positive integers.

    ``shape`` is the skew diagram the cells come from when there is one.
    Intermediate states of row bumping live on regions that are not skew
    diagrams; those carry ``shape=None``.  Semi-standardness is a property
    checked by :func:`is_semistandard`, not an invariant of the type.
    """

    __slots__ = ("_labels", "shape", "_key")

    def __init__(self, labels: Mapping[Cell, int], shape: SkewShape | None = None):
        labels = dict(labels)
        if any(v < 1 for v in labels.values()):
            raise ValueError("labels must be positive integers")
        if shape is not None and set(labels) != set(shape.cells()):
            raise ValueError(f"labelled cells do not match the shape {shape}")
        self._labels = labels
        self.shape = shape
        self._key = tuple(sorted(labels.items()))

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: Sequence[Sequence[int]]) -> "SkewTableau":
        """Build from per-row label lists (only the cells of each row)."""
        if len(rows) != shape.n_rows:
            raise ValueError(f"expected {shape.n_rows} rows, got {len(rows)}")
        labels = {}
        for i, row in enumerate(rows):
            span = shape.row_span(i)
            if len(row) != len(span):
                raise ValueError(f"row {i + 1} needs {len(span)} labels, got {len(row)}")
            labels.update(((i, j), v) for j, v in zip(span, row))
        return cls(labels, shape)

    @property
    def labels(self) -> Mapping[Cell, int]:
        return self._labels

    def __getitem__(self, cell: Cell) -> int:
        return self._labels[cell]

    def get(self, cell: Cell, default=None):
        return self._labels.get(cell, default)

    def __contains__(self, cell: object) -> bool:
        return cell in self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewTableau):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"SkewTableau({dict(self._key)!r})"

    def region(self) -> CellRegion:
        return CellRegion(frozenset(self._labels))

    def rows(self) -> dict[int, list[tuple[int, int]]]:
        """Row index -> [(col, label), ...] sorted by column."""
        out: dict[int, list[tuple[int, int]]] = {}
        for (i, j), v in sorted(self._labels.items()):
            out.setdefault(i, []).append((j, v))
        return out

    def __str__(self) -> str:
        return format_tableau(self)


def content(t: SkewTableau) -> tuple[int, ...]:
    """Label multiplicities ``(c_1, c_2, ...)`` with trailing zeros dropped.

    Not necessarily a partition: ``(1, 3, 0, 1)`` is a valid content.
    """
    counts = Counter(t.labels.values())
    return tuple(counts.get(k, 0) for k in range(1, max(counts, default=0) + 1))


def reverse_reading_word(t: SkewTableau) -> Word:
    """Rows top to bottom, each read right to left."""
    order = sorted(t.labels, key=lambda c: (c[0], -c[1]))
    return tuple(t[c] for c in order)


def is_lattice(word: Iterable[int]) -> bool:
    counts = Counter()
    for w in word:
        counts[w] += 1
        if w > 1 and counts[w] > counts[w - 1]:
            return False
    return True


def is_semistandard(t: SkewTableau) -> bool:
    """Rows weakly increase, columns strictly increase.

    Only horizontally/vertically adjacent cells that are both present are
    compared.
    """
    lab = t.labels
    for (i, j), v in lab.items():
        right = lab.get((i, j + 1))
        if right is not None and right < v:
            return False
        below = lab.get((i + 1, j))
        if below is not None and below <= v:
            return False
    return True


def is_lr(t: SkewTableau) -> bool:
    return is_semistandard(t) and is_lattice(reverse_reading_word(t))


def shift_labels(t: SkewTableau, by: int) -> SkewTableau:
    """Subtract ``by`` from every label (labels must stay positive)."""
    return SkewTableau({c: v - by for c, v in t.labels.items()}, t.shape)


def drop_labels_below(t: SkewTableau, k: int) -> SkewTableau:
    """Remove every cell whose label is ``< k``."""
    return SkewTableau({c: v for c, v in t.labels.items() if v >= k})


def parse_tableau(text: str) -> SkewTableau:
    """Parse the text format: one line per row, ``.`` for inner cells.

    >>> t = parse_tableau(". . 1 1\\n. 1 2\\n2 3")
    >>> t.shape.outer, t.shape.inner
    (Partition((4, 3, 2)), Partition((2, 1)))
    """
    lines = [ln.split() for ln in text.strip("\n").splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    outer, inner, rows = [], [], []
    for n, toks in enumerate(lines, start=1):
        dots = 0
        while dots < len(toks) and toks[dots] == ".":
            dots += 1
        try:
            labels = [int(x) for x in toks[dots:]]
        except ValueError as exc:
            raise ValueError(f"row {n}: labels must be integers after the dots") from exc
        outer.append(len(toks))
        inner.append(dots)
        rows.append(labels)
    shape = SkewShape(Partition(outer), Partition(inner))
    return SkewTableau.from_rows(shape, rows)


def format_tableau(t: SkewTableau) -> str:
    """Render rows with ``.`` for absent cells left of each row's first cell.

    Rows are rendered for every index from 0 to the bottom row, so gaps in
    a general region show up as blank lines.
    """
    if t.shape is not None:
        return "\n".join(
            " ".join(["."] * t.shape.inner.part(i) + [str(t[(i, j)]) for j in t.shape.row_span(i)])
            for i in range(t.shape.n_rows)
        )
    if not len(t):
        return ""
    by_row = t.rows()
    last = max(by_row)
    lines = []
    for i in range(last + 1):
        entries = by_row.get(i, [])
        if not entries:
            lines.append("")
            continue
        toks = []
        col = 0
        for j, v in entries:
            toks.extend(["."] * (j - col))
            toks.append(str(v))
            col = j + 1
        lines.append(" ".join(toks))
    return "\n".join(lines)


def empty_tableau(shape: SkewShape | None = None) -> SkewTableau:
    if shape is not None and shape.size:
        raise ValueError("shape is not empty")
    return SkewTableau({}, shape)


def shape_region(t: SkewTableau) -> CellRegion:
    return region_of(t.shape) if t.shape is not None else t.region()
