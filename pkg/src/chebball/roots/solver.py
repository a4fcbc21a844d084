"""Subdivision root isolation on [-1, 1].

The work list starts from B(0, 1) and is processed breadth first, one
generation at a time. Every ball is classified from ball evaluations of f and
f': sign-definite f ends the branch (plus/minus), sign-definite f' ends it as
monotonous, anything else is halved until the radius floor, below which the
ball is reported as suspect. All balls of a generation are evaluated by one
batched kernel call, and so are the point signs at the ends of all
monotonous intervals.

Roots are then read off the sorted partition: a monotonous interval whose
two flanking signs are opposite holds exactly one simple root.
"""

import logging
from typing import Iterable

import numpy as np
from numpy.typing import NDArray

from chebball.ball.real import RealBall
from chebball.ball.rounding import radius_inflation
from chebball.errors import WorkCapExceededError
from chebball.evaluate.batched import batch_ball_clenshaw
from chebball.evaluate.series import ChebyshevSeries, derivative_coeffs, derivative_error_bound
from chebball.operand import as_result
from chebball.roots.classify import (
    FALLING,
    MINUS,
    PLUS,
    RISING,
    SPLIT,
    ball_sign,
    halve,
    verdict_codes,
)
from chebball.roots.config import SolverConfig
from chebball.roots.labels import (
    IsolatingInterval,
    Label,
    PartitionEntry,
    Sign,
    SolveOutcome,
    SolveStats,
    label_sign,
)

logger = logging.getLogger(__name__)

_DECIDED = {
    PLUS: (Label.Plus, 0),
    MINUS: (Label.Minus, 0),
    RISING: (Label.Monotonous, 1),
    FALLING: (Label.Monotonous, -1),
}

# (center, radius, label, sign of f' for monotonous entries else 0)
_Entry = tuple[float, float, Label, int]


def _bounds(entry: _Entry) -> tuple[float, float]:
    return entry[0] - entry[1], entry[0] + entry[1]


class _Subdivision:
    """Mutable state of one solve; never escapes ``solve``."""

    def __init__(self, f: ChebyshevSeries, cfg: SolverConfig) -> None:
        self.f = f
        self.cfg = cfg
        n = len(f.coeffs) - 1
        df = derivative_coeffs(f)
        # df is padded with a trailing zero so both series share one recurrence
        self.stacked = np.zeros((n + 1, 2))
        self.stacked[:, 0] = f.coeffs
        self.stacked[: len(df.coeffs), 1] = df.coeffs
        self.df_slack = derivative_error_bound(f, cfg.model)
        self.entries: list[_Entry] = []
        self.suspect: list[RealBall] = []
        self.point_signs: dict[float, Sign] = {}
        self.balls_evaluated = 0
        self.max_depth = 0
        self.generations = 0

    def certify_points(self, xs: Iterable[float]) -> None:
        """Certify the sign of f at every uncached point with one batched call."""
        todo = sorted({x for x in xs if x not in self.point_signs})
        if not todo:
            return
        centers = np.array(todo)
        values, spreads = batch_ball_clenshaw(
            self.cfg.variant, self.stacked[:, :1], centers, np.zeros_like(centers), self.cfg.model
        )
        self.balls_evaluated += len(todo)
        for x, c, r in zip(todo, values[0].tolist(), spreads[0].tolist()):
            self.point_signs[x] = ball_sign(RealBall(center=c, radius=r))

    def point_sign(self, x: float) -> Sign:
        """Sign of f at x from a radius-0 ball evaluation, cached per point."""
        self.certify_points((x,))
        return self.point_signs[x]

    def boundaries(self) -> None:
        self.certify_points((-1.0, 1.0))
        for x in (-1.0, 1.0):
            sign = self.point_sign(x)
            if sign is Sign.Unknown:
                logger.debug("f(%r) has no certified sign", x)
                self.entries.append((x, 0.0, Label.Suspect, 0))
                self.suspect.append(RealBall(center=x, radius=0.0))
            else:
                label = Label.Plus if sign is Sign.Plus else Label.Minus
                self.entries.append((x, 0.0, label, 0))

    def check_cap(self, pending: int) -> None:
        # suspects found so far are already partition entries
        reached = len(self.entries) + pending
        if reached > self.cfg.max_intervals:
            raise WorkCapExceededError(self.cfg.max_intervals, reached)

    def classify(
        self, centers: NDArray[np.float64], radii: NDArray[np.float64]
    ) -> NDArray[np.int64]:
        values, spreads = batch_ball_clenshaw(
            self.cfg.variant, self.stacked, centers, radii, self.cfg.model
        )
        self.balls_evaluated += 2 * centers.size
        dr = (spreads[1] + self.df_slack) * radius_inflation(self.cfg.model)
        return verdict_codes(values[0], spreads[0], values[1], dr)

    def subdivide_all(self) -> None:
        centers = np.array([0.0])
        radii = np.array([1.0])
        depth = 0
        while centers.size:
            self.generations += 1
            self.max_depth = depth
            codes = self.classify(centers, radii)
            logger.debug("generation %d: %d balls", depth, centers.size)

            decided = codes != SPLIT
            for c, r, code in zip(
                centers[decided].tolist(), radii[decided].tolist(), codes[decided].tolist()
            ):
                label, slope = _DECIDED[code]
                self.entries.append((c, r, label, slope))

            split = ~decided
            parents, parent_radii = centers[split], radii[split]
            floor = 0.5 * parent_radii < self.cfg.min_radius
            for c, r in zip(parents[floor].tolist(), parent_radii[floor].tolist()):
                self.entries.append((c, r, Label.Suspect, 0))
                self.suspect.append(RealBall(center=c, radius=r))

            centers, radii = halve(parents[~floor], parent_radii[~floor])
            self.check_cap(centers.size)
            depth += 1

    def side_sign(self, neighbour: _Entry, endpoint: float) -> Sign:
        if neighbour[2] is Label.Monotonous:
            return self.point_sign(endpoint)
        return label_sign(neighbour[2])

    def isolate(self, partition: list[_Entry]) -> list[IsolatingInterval]:
        """Turn monotonous runs with opposite flanking signs into isolating intervals.

        Adjacent monotonous intervals with the same slope are merged across a
        shared endpoint whose sign is undecided (a root sitting exactly on a
        subdivision point): f stays strictly monotonic on the union.
        """
        self.certify_points(
            x for entry in partition if entry[2] is Label.Monotonous for x in _bounds(entry)
        )
        roots: list[IsolatingInterval] = []
        i = 0
        while i < len(partition):
            entry = partition[i]
            if entry[2] is not Label.Monotonous:
                i += 1
                continue
            j = i
            while True:
                nxt = partition[j + 1]
                hi = _bounds(partition[j])[1]
                if (
                    nxt[2] is Label.Monotonous
                    and nxt[3] == entry[3]
                    and self.point_sign(hi) is Sign.Unknown
                ):
                    j += 1
                    continue
                break
            lo, hi = _bounds(entry)[0], _bounds(partition[j])[1]
            left = self.side_sign(partition[i - 1], lo)
            right = self.side_sign(partition[j + 1], hi)
            if Sign.Unknown in (left, right):
                center = 0.5 * (lo + hi)
                self.suspect.append(RealBall(center=center, radius=hi - center))
            elif left != right:
                roots.append(IsolatingInterval(lo=lo, hi=hi, sign_left=left, sign_right=right))
            i = j + 1
        return roots

    def run(self) -> SolveOutcome:
        self.boundaries()
        self.subdivide_all()
        partition = sorted(self.entries, key=_bounds)
        roots = self.isolate(partition)
        suspect = sorted(self.suspect, key=lambda b: (b.center - b.radius, b.center + b.radius))
        stats = SolveStats(
            balls_evaluated=self.balls_evaluated,
            max_depth=self.max_depth,
            partition_size=len(partition),
            generations=self.generations,
        )
        logger.info(
            "degree %d: %d roots, %d suspect, %d balls",
            len(self.f.coeffs) - 1,
            len(roots),
            len(suspect),
            stats.balls_evaluated,
        )
        if suspect:
            logger.warning("%d suspect regions left undecided", len(suspect))
        return SolveOutcome(
            roots=roots,
            suspect=suspect,
            stats=stats,
            partition=[
                PartitionEntry(interval=RealBall(center=c, radius=r), label=label)
                for c, r, label, _ in partition
            ],
        )


@as_result
def solve(f: ChebyshevSeries, cfg: SolverConfig = SolverConfig()) -> SolveOutcome:
    """Isolate the real roots of f in [-1, 1].

    Returns Error(WorkCapExceededError) when the partition outgrows
    ``cfg.max_intervals`` and Error(RangeExceededError) on overflow.
    """
    return _Subdivision(f, cfg).run()
