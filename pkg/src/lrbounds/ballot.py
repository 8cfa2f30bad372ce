"""Ballot sequences and tilings of LR tableaux by them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import Cell
from .tableaux import SkewTableau, is_semistandard


class NoTilingError(ValueError):
    """The tableau cannot be split into ballot sequences (it is not LR)."""


@dataclass(frozen=True)
class BallotSequence:
    """Labelled cells ordered from the highest label down to the lowest.

    Consecutive entries step strictly up and weakly right.  ``low`` is the
    lowest label; it is 1 for genuine ballot sequences and may be larger
    for the ballot-like sequences that appear during row bumping.
    """

    cells: tuple[Cell, ...]
    low: int = 1

    @property
    def high(self) -> int:
        return self.low + len(self.cells) - 1

    def entries(self) -> list[tuple[Cell, int]]:
        return [(c, self.high - k) for k, c in enumerate(self.cells)]

    def cell_of(self, label: int) -> Cell | None:
        k = self.high - label
        return self.cells[k] if 0 <= k < len(self.cells) else None

    def is_northeast_chain(self) -> bool:
        return all(
            r2 < r1 and c2 >= c1 for (r1, c1), (r2, c2) in zip(self.cells, self.cells[1:])
        )

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        return ",".join(f"[({i + 1},{j + 1}),{v}]" for (i, j), v in self.entries())


@dataclass(frozen=True)
class Tiling:
    sequences: tuple[BallotSequence, ...]

    def owner(self) -> dict[Cell, int]:
        out: dict[Cell, int] = {}
        for k, seq in enumerate(self.sequences):
            for c in seq.cells:
                out.setdefault(c, k)
        return out

    def __len__(self) -> int:
        return len(self.sequences)

    def __str__(self) -> str:
        return "\n".join(f"B{k + 1} = {seq}" for k, seq in enumerate(self.sequences))


def canonical_tiling(t: SkewTableau) -> Tiling:
    """Peel ballot sequences off ``t`` greedily.

    Each sequence starts at the highest, then rightmost, cell carrying the
    current maximum label; every next label is taken from the highest row
    strictly above the previous cell that holds it weakly to the right,
    rightmost within that row.  Raises :class:`NoTilingError` when some
    label has no admissible successor, which happens exactly when ``t`` is
    not an LR tableau.
    """
    if not is_semistandard(t):
        raise ValueError("canonical tiling needs a semi-standard tableau")
    remaining = dict(t.labels)
    sequences = []
    while remaining:
        top = max(remaining.values())
        start = min((c for c, v in remaining.items() if v == top), key=lambda c: (c[0], -c[1]))
        chain = [start]
        for label in range(top - 1, 0, -1):
            r0, c0 = chain[-1]
            candidates = [
                c for c, v in remaining.items() if v == label and c[0] < r0 and c[1] >= c0
            ]
            if not candidates:
                raise NoTilingError(
                    f"no label {label} northeast of cell ({r0 + 1},{c0 + 1}) labelled {label + 1}"
                )
            chain.append(min(candidates, key=lambda c: (c[0], -c[1])))
        for c in chain:
            del remaining[c]
        sequences.append(BallotSequence(tuple(chain)))
    return Tiling(tuple(sequences))


def verify_tiling(t: SkewTableau, tiling: Tiling, strict: bool = False) -> bool:
    """Check that ``tiling`` splits the cells of ``t`` into ballot chains
    whose labels agree with ``t``.  With ``strict`` every chain must end
    at label 1."""
    seen: set[Cell] = set()
    for seq in tiling.sequences:
        if not seq.cells or seq.low < 1 or (strict and seq.low != 1):
            return False
        if not seq.is_northeast_chain():
            return False
        for c, v in seq.entries():
            if c in seen or t.get(c) != v:
                return False
            seen.add(c)
    return len(seen) == len(t)


def parse_tiling(text: str) -> Tiling:
    """Parse lines like ``[(4,1),4],[(3,4),3],[(2,4),2],[(1,5),1]``
    (1-based coordinates, optional ``B1 =`` prefix)."""
    pattern = re.compile(r"\[\((\d+),(\d+)\),(\d+)\]")
    sequences = []
    for line in text.splitlines():
        found = pattern.findall(line.replace(" ", ""))
        if not found:
            continue
        cells = tuple((int(i) - 1, int(j) - 1) for i, j, _ in found)
        labels = [int(v) for _, _, v in found]
        if any(a - b != 1 for a, b in zip(labels, labels[1:])):
            raise ValueError(f"labels must descend by one: {labels}")
        sequences.append(BallotSequence(cells, labels[-1]))
    return Tiling(tuple(sequences))


def tiling_from_entries(seqs: Iterable[Sequence[tuple[Cell, int]]]) -> Tiling:
    out = []
    for entries in seqs:
        out.append(BallotSequence(tuple(c for c, _ in entries), entries[-1][1]))
    return Tiling(tuple(out))
