"""Midpoint-radius real balls B(c, r) = [c - r, c + r]."""

import math

from chebball.ball.rounding import RoundingModel, local_rounding_bound, round_up
from chebball.errors import RangeExceededError
from chebball.struct import struct


def _check_real_ball(ball: "RealBall") -> None:
    if not (math.isfinite(ball.center) and math.isfinite(ball.radius)):
        raise RangeExceededError("RealBall")
    if ball.radius < 0.0:
        raise ValueError(f"radius must be non-negative, got {ball.radius!r}")


@struct(invariant=_check_real_ball)
class RealBall:
    """The closed interval of points within ``radius`` of ``center``."""

    center: float
    radius: float = 0.0


def real_ball(center: float, radius: float, where: str = "ball arithmetic") -> RealBall:
    """Build a ball, reporting overflow or NaN as range exceeded."""
    if not (math.isfinite(center) and math.isfinite(radius)):
        raise RangeExceededError(where)
    return RealBall(center=center, radius=radius)


def rb_lower(x: RealBall) -> float:
    return x.center - x.radius


def rb_upper(x: RealBall) -> float:
    return x.center + x.radius


def rb_width(x: RealBall) -> float:
    return 2.0 * x.radius


def rb_contains(x: RealBall, value: float) -> bool:
    return abs(value - x.center) <= x.radius


def rb_neg(x: RealBall) -> RealBall:
    return RealBall(center=-x.center, radius=x.radius)


def rb_add(x: RealBall, y: RealBall, model: RoundingModel) -> RealBall:
    """Enclose {u + v : u in x, v in y}."""
    center = x.center + y.center
    slack = local_rounding_bound(model, (abs(center),))
    return real_ball(center, round_up(model, x.radius + y.radius + slack), "rb_add")


def rb_sub(x: RealBall, y: RealBall, model: RoundingModel) -> RealBall:
    return rb_add(x, rb_neg(y), model)


def rb_add_scalar(x: RealBall, c: float, model: RoundingModel) -> RealBall:
    """Enclose {u + c : u in x} for an exact float c."""
    center = x.center + c
    slack = local_rounding_bound(model, (abs(center),))
    return real_ball(center, round_up(model, x.radius + slack), "rb_add_scalar")


def rb_mul_scalar(c: float, x: RealBall, model: RoundingModel) -> RealBall:
    """Enclose {c * u : u in x}."""
    if not math.isfinite(c):
        raise RangeExceededError("rb_mul_scalar")
    center = c * x.center
    slack = local_rounding_bound(model, (abs(center),))
    return real_ball(center, round_up(model, abs(c) * x.radius + slack), "rb_mul_scalar")


def rb_mul(x: RealBall, y: RealBall, model: RoundingModel) -> RealBall:
    """Enclose {u * v : u in x, v in y}."""
    center = x.center * y.center
    spread = round_up(model, abs(x.center) * y.radius + abs(y.center) * x.radius + x.radius * y.radius)
    slack = local_rounding_bound(model, (abs(center),))
    return real_ball(center, round_up(model, spread + slack), "rb_mul")
