"""Exhaustive box census: true positivity versus filter survival.

For every ``gamma`` in the box, every ``lambda`` inside ``gamma`` and every
``mu`` in the box with ``|mu| = |gamma/lambda|``, count the triples with a
positive coefficient and the triples the filter lets through, bucketed by
``|gamma/lambda|``.  Any ``mu`` with a positive coefficient fits inside
``gamma``, so restricting ``mu`` to the box loses no positives.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .feasibility import DEFAULT_CONFIG, FilterConfig, filter_triple
from .oracle import lr_expansion
from .partitions import Partition, SkewShape, partitions_in_box, subpartitions

log = logging.getLogger(__name__)

MU_UNIVERSE = "partitions in the box with |mu| = |gamma/lambda|"
CSV_HEADER = ("size", "true_positive", "surviving", "false_pass")


@dataclass
class SurveyRow:
    skew_size: int
    true_positive: int = 0
    surviving: int = 0
    candidates: int = 0

    @property
    def false_pass(self) -> int:
        return self.surviving - self.true_positive

    def as_dict(self) -> dict:
        return {
            "size": self.skew_size,
            "true_positive": self.true_positive,
            "surviving": self.surviving,
            "false_pass": self.false_pass,
        }


@dataclass(frozen=True)
class SurveyConfig:
    rows: int
    cols: int
    filter: FilterConfig = DEFAULT_CONFIG
    workers: int | None = None

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("box dimensions must be at least 1")

    def resolved_workers(self) -> int:
        if self.workers is not None:
            return max(1, self.workers)
        env = os.environ.get("LR_SURVEY_WORKERS")
        return max(1, int(env)) if env else 1


@dataclass
class SurveyResult:
    config: SurveyConfig
    rows: list[SurveyRow]
    runtime_seconds: float = 0.0
    bucket_seconds: dict[int, float] = field(default_factory=dict)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow([r.skew_size, r.true_positive, r.surviving, r.false_pass])
        return buf.getvalue()

    def to_json(self) -> str:
        fam = sorted(f"{b.value}{v}" for b, v in self.config.filter.families)
        doc = {
            "config": {
                "box": [self.config.rows, self.config.cols],
                "families": fam,
                "max_upper_j": self.config.filter.max_upper_j,
                "mu_universe": MU_UNIVERSE,
            },
            "rows": [r.as_dict() for r in self.rows],
            "runtime_seconds": round(self.runtime_seconds, 3),
        }
        return json.dumps(doc, indent=2) + "\n"


def _census_for_gamma(args) -> tuple[dict, dict]:
    gamma, mus_by_size, fcfg = args
    counts: dict[int, list[int]] = defaultdict(lambda: [0, 0, 0])
    seconds: dict[int, float] = defaultdict(float)
    for lam in subpartitions(gamma):
        t0 = time.perf_counter()
        shape = SkewShape(gamma, lam)
        size = shape.size
        positive = lr_expansion(shape)
        bucket = counts[size]
        for mu in mus_by_size.get(size, ()):
            bucket[2] += 1
            if positive.get(mu, 0) > 0:
                bucket[0] += 1
            if filter_triple(gamma, lam, mu, fcfg).survives:
                bucket[1] += 1
        seconds[size] += time.perf_counter() - t0
    return dict(counts), dict(seconds)


def survey(cfg: SurveyConfig) -> SurveyResult:
    start = time.perf_counter()
    box = partitions_in_box(cfg.rows, cfg.cols)
    mus_by_size: dict[int, list[Partition]] = defaultdict(list)
    for mu in box:
        mus_by_size[mu.size].append(mu)
    jobs = [(gamma, dict(mus_by_size), cfg.filter) for gamma in box]
    workers = cfg.resolved_workers()
    log.info("survey %dx%d: %d outer shapes, %d worker(s)", cfg.rows, cfg.cols, len(jobs), workers)

    totals: dict[int, SurveyRow] = {}
    seconds: dict[int, float] = defaultdict(float)

    def merge(done: int, part: tuple[dict, dict]) -> None:
        counts, secs = part
        for size, (tp, sv, cand) in counts.items():
            row = totals.setdefault(size, SurveyRow(size))
            row.true_positive += tp
            row.surviving += sv
            row.candidates += cand
        for size, s in secs.items():
            seconds[size] += s
        if done % 25 == 0 or done == len(jobs):
            log.info("  %d/%d outer shapes done", done, len(jobs))

    if workers == 1:
        for n, job in enumerate(jobs, start=1):
            merge(n, _census_for_gamma(job))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for n, part in enumerate(pool.map(_census_for_gamma, jobs, chunksize=4), start=1):
                merge(n, part)

    rows = [totals[s] for s in sorted(totals)]
    for r in rows:
        log.info(
            "  size %2d: true=%d surviving=%d false_pass=%d (%.2fs)",
            r.skew_size, r.true_positive, r.surviving, r.false_pass, seconds[r.skew_size],
        )
    return SurveyResult(cfg, rows, time.perf_counter() - start, dict(seconds))


def count_candidates(rows: int, cols: int) -> dict[int, int]:
    """Number of (gamma, lambda, mu) candidates per skew size, counted
    directly from partition sizes without building any tableau."""
    box = partitions_in_box(rows, cols)
    by_size: dict[int, int] = defaultdict(int)
    for mu in box:
        by_size[mu.size] += 1
    out: dict[int, int] = defaultdict(int)
    for gamma in box:
        for lam in subpartitions(gamma):
            out[gamma.size - lam.size] += by_size[gamma.size - lam.size]
    return dict(out)

