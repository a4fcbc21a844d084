"""Timing sweep over random series and a log-log fit of the growth exponent."""

import csv
import logging
import math
import time
from typing import Sequence, TextIO

import numpy as np

from chebball.cli.generate import gen_random
from chebball.errors import ChebBallError
from chebball.operand import ordered_map
from chebball.roots.config import SolverConfig
from chebball.roots.solver import solve
from chebball.struct import struct

logger = logging.getLogger(__name__)

CSV_HEADER = ("degree", "seed", "wall_time_seconds", "n_roots", "n_suspect", "n_balls_evaluated")

_CLOCK_RESOLUTION = time.get_clock_info("perf_counter").resolution


def _check_record(record: "BenchRecord") -> None:
    if not record.wall_time_seconds > 0.0:
        raise ValueError(f"wall time must be positive, got {record.wall_time_seconds!r}")
    counts = (record.n_roots, record.n_suspect, record.n_balls_evaluated)
    if any(c is not None and c < 0 for c in counts):
        raise ValueError("counts must be non-negative")


@struct(invariant=_check_record)
class BenchRecord:
    """One timed solve. Counts are None when the solve failed."""

    degree: int
    seed: int
    wall_time_seconds: float
    n_roots: int | None = None
    n_suspect: int | None = None
    n_balls_evaluated: int | None = None


def failed(record: BenchRecord) -> bool:
    return record.n_roots is None


def run_trial(job: tuple[int, int, SolverConfig]) -> BenchRecord:
    """Generate and solve one instance; only solve() is timed."""
    degree, seed, cfg = job
    series = gen_random(degree, seed)
    start = time.perf_counter()
    result = solve(series, cfg)
    elapsed = max(time.perf_counter() - start, _CLOCK_RESOLUTION)
    try:
        outcome = result.unwrap()
    except ChebBallError as exc:
        logger.warning("degree %d seed %d failed: %s", degree, seed, exc)
        return BenchRecord(degree=degree, seed=seed, wall_time_seconds=elapsed)
    record = BenchRecord(
        degree=degree,
        seed=seed,
        wall_time_seconds=elapsed,
        n_roots=len(outcome.roots),
        n_suspect=len(outcome.suspect),
        n_balls_evaluated=outcome.stats.balls_evaluated,
    )
    logger.info("degree %d seed %d: %.6fs, %d roots", degree, seed, elapsed, record.n_roots)
    return record


def run_bench(
    degrees: Sequence[int],
    trials: int,
    seed: int,
    cfg: SolverConfig = SolverConfig(),
    workers: int = 1,
) -> list[BenchRecord]:
    """One record per (degree, trial), in that order; trial t uses seed + t."""
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if list(degrees) != sorted(degrees):
        raise ValueError("degrees must be sorted ascending")
    jobs = [(degree, seed + trial, cfg) for degree in degrees for trial in range(trials)]
    return ordered_map(run_trial, jobs, workers)


def write_csv(records: Sequence[BenchRecord], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        counts = (record.n_roots, record.n_suspect, record.n_balls_evaluated)
        writer.writerow(
            [record.degree, record.seed, repr(record.wall_time_seconds)]
            + ["" if c is None else c for c in counts]
        )


def fit_exponent(records: Sequence[BenchRecord]) -> float | None:
    """Slope of log(time) against log(degree) over the largest half of the degrees.

    Failed rows are left out. None when fewer than two distinct degrees remain.
    """
    ok = [r for r in records if not failed(r)]
    degrees = sorted({r.degree for r in ok})
    if len(degrees) < 2:
        return None
    # at least two degrees, so the slope is defined
    upper = set(degrees[min(len(degrees) // 2, len(degrees) - 2) :])
    chosen = [r for r in ok if r.degree in upper]
    x = np.log([float(r.degree) for r in chosen])
    y = np.log([r.wall_time_seconds for r in chosen])
    slope = float(np.polyfit(x, y, 1)[0])
    return slope if math.isfinite(slope) else None
