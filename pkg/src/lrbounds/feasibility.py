"""Necessary conditions for ``c(gamma; lambda, mu) > 0``.

Every lower derivation of the skew shape must be dominated (in the
generalized dominance order) by the matching tail of the content, and
every tail must be dominated by the matching upper derivation.  The same
holds for the three symmetric variants obtained by swapping ``lambda``
and ``mu`` and/or transposing everything.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .derivations import lower_ladder, upper_table
from .partitions import Partition, SkewShape, contains, gdom_le, transpose


class Bound(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


VARIANTS = {
    1: "gamma/lambda, mu",
    2: "gamma/mu, lambda",
    3: "gamma^T/lambda^T, mu^T",
    4: "gamma^T/mu^T, lambda^T",
}

ALL_FAMILIES = frozenset((b, v) for v in VARIANTS for b in Bound)


class Verdict(enum.Enum):
    ELIMINATED = "ELIMINATED"
    SURVIVES = "SURVIVES"


@dataclass(frozen=True)
class FilterConfig:
    families: frozenset = ALL_FAMILIES
    max_upper_j: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "families", frozenset(self.families))
        if not self.families:
            raise ValueError("at least one bound family must be enabled")
        unknown = self.families - ALL_FAMILIES
        if unknown:
            raise ValueError(f"unknown bound families: {unknown}")

    @classmethod
    def build(
        cls,
        variants: Sequence[int] = (1, 2, 3, 4),
        lower: bool = True,
        upper: bool = True,
        max_upper_j: int | None = None,
    ) -> "FilterConfig":
        kinds = [b for b, on in ((Bound.LOWER, lower), (Bound.UPPER, upper)) if on]
        return cls(frozenset((b, v) for v in variants for b in kinds), max_upper_j)


DEFAULT_CONFIG = FilterConfig()


@dataclass(frozen=True)
class Witness:
    """One failed inequality ``lhs <=_GDom rhs``.

    ``family`` is ``"lower"``, ``"upper"``, ``"size"`` or ``"containment"``;
    the last two are the pre-checks and carry no variant.
    """

    family: str
    variant: int | None = None
    j: int | None = None
    rows: tuple[int, ...] | None = None
    lhs: Partition | None = None
    rhs: Partition | None = None
    detail: str = ""

    def holds(self) -> bool:
        """Recompute the inequality; a genuine witness returns False."""
        return gdom_le(self.lhs, self.rhs)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "variant": self.variant,
            "j": self.j,
            "rows": list(self.rows) if self.rows is not None else None,
            "lhs": list(self.lhs) if self.lhs is not None else None,
            "rhs": list(self.rhs) if self.rhs is not None else None,
        }

    def __str__(self) -> str:
        if self.family in ("size", "containment"):
            return f"{self.family} check failed: {self.detail}"
        fmt = lambda p: "(" + ",".join(map(str, p)) + ")"
        where = f"j={self.j}" if self.family == "lower" else f"rows={fmt(self.rows)}"
        return (
            f"{self.family} bound, variant {self.variant} [{VARIANTS[self.variant]}], {where}: "
            f"{fmt(self.lhs)} is not <=_GDom {fmt(self.rhs)}"
        )


@dataclass
class FilterReport:
    verdict: Verdict
    witness: Witness | None = None
    checks_performed: int = 0

    @property
    def survives(self) -> bool:
        return self.verdict is Verdict.SURVIVES

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "witness": self.witness.to_dict() if self.witness else None,
            "checks_performed": self.checks_performed,
        }


@dataclass
class _Counter:
    n: int = 0


def lower_bounds_hold(shape: SkewShape, mu: Sequence[int], variant: int = 1,
                      _count: _Counter | None = None) -> Witness | None:
    """First ``j`` with ``lower_derivation(shape, j)`` not below ``mu``'s
    ``j``-tail, or None.  Stops at the first empty derivation."""
    mu = Partition(mu)
    for j, d in enumerate(lower_ladder(shape)):
        if _count is not None:
            _count.n += 1
        tail = mu.tail(j)
        if not gdom_le(d, tail):
            return Witness("lower", variant, j, None, d, tail)
    return None


def upper_bounds_hold(shape: SkewShape, mu: Sequence[int], cfg: FilterConfig = DEFAULT_CONFIG,
                      variant: int = 1, _count: _Counter | None = None) -> Witness | None:
    mu = Partition(mu)
    for rows, d in upper_table(shape, cfg.max_upper_j):
        if _count is not None:
            _count.n += 1
        tail = mu.tail(len(rows))
        if not gdom_le(tail, d):
            return Witness("upper", variant, len(rows), rows, tail, d)
    return None


def variant_instances(gamma: Partition, lam: Partition, mu: Partition):
    """``(variant, skew shape, content)`` for the four symmetric forms.

    Generated lazily; the shape is None once ``mu`` does not fit in
    ``gamma`` (variants 2-4 then have no skew shape), so variant 1 is
    still checked for such triples.
    """
    yield 1, SkewShape(gamma, lam), mu
    if not contains(gamma, mu):
        yield 2, None, lam
        return
    gt, lt, mt = transpose(gamma), transpose(lam), transpose(mu)
    yield 2, SkewShape(gamma, mu), lam
    yield 3, SkewShape(gt, lt), mt
    yield 4, SkewShape(gt, mt), lt


def _containment(name: str, inner: Partition) -> Witness:
    return Witness("containment", detail=f"{name} = ({','.join(map(str, inner))}) is not inside gamma")


def filter_triple(gamma: Sequence[int], lam: Sequence[int], mu: Sequence[int],
                  cfg: FilterConfig = DEFAULT_CONFIG) -> FilterReport:
    gamma, lam, mu = Partition(gamma), Partition(lam), Partition(mu)
    if lam.size + mu.size != gamma.size:
        return FilterReport(Verdict.ELIMINATED, Witness(
            "size", detail=f"|lambda|+|mu| = {lam.size + mu.size} != |gamma| = {gamma.size}"))
    if not contains(gamma, lam):
        return FilterReport(Verdict.ELIMINATED, _containment("lambda", lam))
    count = _Counter()
    for variant, shape, content in variant_instances(gamma, lam, mu):
        if shape is None:
            return FilterReport(Verdict.ELIMINATED, _containment("mu", mu), count.n)
        w = None
        if (Bound.LOWER, variant) in cfg.families:
            w = lower_bounds_hold(shape, content, variant, count)
        if w is None and (Bound.UPPER, variant) in cfg.families:
            w = upper_bounds_hold(shape, content, cfg, variant, count)
        if w is not None:
            return FilterReport(Verdict.ELIMINATED, w, count.n)
    return FilterReport(Verdict.SURVIVES, None, count.n)
