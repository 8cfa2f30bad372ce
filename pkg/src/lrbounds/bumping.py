"""Row bumping on ballot-tiled LR tableaux.

Bumping a labelled cell ``x`` (label ``L`` in sequence ``B_k``) pushes every
label of ``B_k`` below ``L`` one step up along the sequence: the cell of
``(L-1)_k`` takes ``L``, the cell of ``(L-2)_k`` takes ``L-1``, and so on,
``x`` is vacated and the lowest label of ``B_k`` leaves the tableau.
Before each step the target cell is checked; if the new label would break
column strictness or row weakness, the tails of ``B_k`` and of the
sequence owning the offending cell are exchanged and the check repeats.

Bumping every cell of a row, right to left, empties the row; stacking the
rows below it up by one gives ``T^(i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .ballot import BallotSequence, Tiling, canonical_tiling, verify_tiling
from .partitions import Cell, SkewShape
from .tableaux import SkewTableau, is_semistandard


class BumpError(RuntimeError):
    """The tiling cannot be repaired (malformed input or a stuck bump)."""


@dataclass(frozen=True)
class TiledTableau:
    tableau: SkewTableau
    tiling: Tiling

    @classmethod
    def canonical(cls, t: SkewTableau) -> "TiledTableau":
        return cls(t, canonical_tiling(t))

    def is_valid(self) -> bool:
        return is_semistandard(self.tableau) and verify_tiling(self.tableau, self.tiling)

    def subindexed(self) -> str:
        """Render as rows of ``label_seq`` tokens, e.g. ``4_3``."""
        owner = self.tiling.owner()
        rows: dict[int, list[tuple[int, str]]] = {}
        for (i, j), v in self.tableau.labels.items():
            rows.setdefault(i, []).append((j, f"{v}_{owner[(i, j)] + 1}"))
        if not rows:
            return "(empty)"
        width = max(len(tok) for row in rows.values() for _, tok in row)
        lines = []
        for i in range(max(rows) + 1):
            cells = dict(rows.get(i, []))
            last = max(cells, default=-1)
            lines.append(" ".join(cells.get(j, ".").rjust(width) for j in range(last + 1)).rstrip())
        return "\n".join(lines)


class _Work:
    """Mutable working copy: labels, sequences (cells high to low), lows."""

    def __init__(self, tt: TiledTableau):
        self.shape = tt.tableau.shape
        self.labels = dict(tt.tableau.labels)
        self.seqs = [list(s.cells) for s in tt.tiling.sequences]
        self.lows = [s.low for s in tt.tiling.sequences]
        self.owner = tt.tiling.owner()

    def high(self, k: int) -> int:
        return self.lows[k] + len(self.seqs[k]) - 1

    def cell_of(self, k: int, label: int) -> Cell | None:
        idx = self.high(k) - label
        return self.seqs[k][idx] if 0 <= idx < len(self.seqs[k]) else None

    def swap_tails(self, k: int, r: int, level: int) -> None:
        """Exchange the parts of ``B_k`` and ``B_r`` with labels <= level.

        Either part may be empty when its sequence is ballot-like and
        already starts above ``level``.
        """
        ik = self.high(k) - level
        ir = self.high(r) - level
        if ik < 0 or ir < 0:
            raise BumpError(f"sequences {k + 1} and {r + 1} do not both reach label {level + 1}")
        tail_k, tail_r = self.seqs[k][ik:], self.seqs[r][ir:]
        self.seqs[k][ik:], self.seqs[r][ir:] = tail_r, tail_k
        self.lows[k], self.lows[r] = self.lows[r], self.lows[k]
        for c in tail_r:
            self.owner[c] = k
        for c in tail_k:
            self.owner[c] = r

    def freeze(self, shape: SkewShape | None) -> TiledTableau:
        seqs = tuple(
            BallotSequence(tuple(cells), low) for cells, low in zip(self.seqs, self.lows) if cells
        )
        return TiledTableau(SkewTableau(self.labels, shape), Tiling(seqs))


def _bump(w: _Work, x: Cell, trace: Callable[[str, TiledTableau], None] | None = None) -> None:
    if x not in w.labels:
        raise BumpError(f"cell ({x[0] + 1},{x[1] + 1}) is not labelled")
    k = w.owner[x]
    top = w.labels[x]
    if w.cell_of(k, top) != x:
        raise BumpError("tiling does not match the tableau")
    # one swap per sequence per level is the most a repair can need
    budget = len(w.seqs) + 1
    level = top
    while level > w.lows[k]:
        for _ in range(budget):
            p = w.cell_of(k, level - 1)
            if p is None:
                break
            below = (p[0] + 1, p[1])
            if below != x and w.labels.get(below) == level and w.owner[below] != k:
                other = w.owner[below]
                w.swap_tails(k, other, level - 1)
                if trace:
                    trace(f"column conflict at label {level - 1}: swapped tails with B{other + 1}", w.freeze(None))
                continue
            right = (p[0], p[1] + 1)
            if right != x and w.labels.get(right) == level - 1:
                s = right
                while w.labels.get((s[0], s[1] + 1)) == level - 1:
                    s = (s[0], s[1] + 1)
                other = w.owner[s]
                w.swap_tails(k, other, level - 1)
                if trace:
                    trace(f"row conflict at label {level - 1}: swapped tails with B{other + 1}", w.freeze(None))
                continue
            break
        else:
            raise BumpError(f"repair did not settle at label {level - 1}")
        level -= 1
    cells = w.seqs[k]
    idx = cells.index(x)
    for c in cells[idx + 1:]:
        w.labels[c] += 1
    del w.labels[x]
    del w.owner[x]
    del cells[idx]
    w.lows[k] += 1
    if trace:
        trace(f"bumped {top}_{k + 1}", w.freeze(None))


def bump_cell(tt: TiledTableau, cell: Cell, trace=None) -> TiledTableau:
    """Bump the label at ``cell`` (0-based) out along its ballot sequence.

    The result lives on the original cells minus ``cell``; that region is
    generally not a skew diagram, so its tableau has ``shape=None``.
    """
    w = _Work(tt)
    _bump(w, cell, trace)
    return w.freeze(None)


def _restack(w: _Work, row: int) -> None:
    def move(c: Cell) -> Cell:
        return (c[0] - 1, c[1]) if c[0] > row else c

    w.labels = {move(c): v for c, v in w.labels.items()}
    w.owner = {move(c): k for c, k in w.owner.items()}
    w.seqs = [[move(c) for c in cells] for cells in w.seqs]


def _bump_row(w: _Work, row: int, trace=None) -> None:
    shape = w.shape
    if shape is None:
        raise BumpError("row bumping needs a tableau on a skew shape")
    if not 0 <= row < shape.n_rows:
        raise IndexError(f"row {row + 1} outside 1..{shape.n_rows}")
    span = shape.row_span(row)
    if not span:
        raise BumpError(f"row {row + 1} is empty")
    for j in reversed(span):
        _bump(w, (row, j), trace)
    _restack(w, row)
    w.shape = shape.without_rows([row])


def bump_row(tt: TiledTableau, row: int, trace=None) -> TiledTableau:
    """``T^(row)`` for a 1-based row index."""
    w = _Work(tt)
    _bump_row(w, row - 1, trace)
    return w.freeze(w.shape)


def iterated_bump(tt: TiledTableau, rows: Sequence[int], trace=None) -> TiledTableau:
    """Remove the 1-based ``rows`` (strictly increasing, original indexing)
    one after another.  Rows of the shape with no cells are just dropped."""
    rows = tuple(rows)
    if any(b <= a for a, b in zip(rows, rows[1:])):
        raise ValueError(f"row indices must be strictly increasing: {rows}")
    w = _Work(tt)
    for done, r in enumerate(rows):
        current = r - 1 - done
        if w.shape is None or not 0 <= current < w.shape.n_rows:
            raise IndexError(f"row {r} out of range")
        if w.shape.row_span(current):
            _bump_row(w, current, trace)
        else:
            _restack(w, current)
            w.shape = w.shape.without_rows([current])
    return w.freeze(w.shape)
