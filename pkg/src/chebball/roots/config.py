"""Solver configuration."""

from chebball.ball.rounding import DOUBLE, RoundingModel
from chebball.evaluate.ball_clenshaw import Variant
from chebball.struct import struct

DEFAULT_MIN_RADIUS = 2.0**-40
DEFAULT_MAX_INTERVALS = 1_000_000


def _check_config(cfg: "SolverConfig") -> None:
    if not 0.0 < cfg.min_radius < 1.0:
        raise ValueError(f"min_radius must lie in (0, 1), got {cfg.min_radius!r}")
    if cfg.max_intervals < 4:
        raise ValueError(f"max_intervals must be at least 4, got {cfg.max_intervals}")


@struct(invariant=_check_config)
class SolverConfig:
    """Subdivision floor, radius scheme and work cap of one solve."""

    min_radius: float = DEFAULT_MIN_RADIUS
    variant: Variant = Variant.Backward
    max_intervals: int = DEFAULT_MAX_INTERVALS
    model: RoundingModel = DOUBLE
