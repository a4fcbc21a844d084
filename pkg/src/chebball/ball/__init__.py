"""Midpoint-radius ball arithmetic with a conservative rounding model."""

from chebball.ball.complex import ComplexBall, cb_contains, cb_rotate
from chebball.ball.real import (
    RealBall,
    rb_add,
    rb_add_scalar,
    rb_contains,
    rb_lower,
    rb_mul,
    rb_mul_scalar,
    rb_neg,
    rb_sub,
    rb_upper,
    rb_width,
    real_ball,
)
from chebball.ball.rounding import (
    DOUBLE,
    DOUBLE_UNIT_ROUNDOFF,
    SAFETY_FACTOR,
    RoundingModel,
    local_rounding_bound,
    radius_inflation,
    round_up,
)

__all__ = [
    "ComplexBall",
    "cb_contains",
    "cb_rotate",
    "RealBall",
    "real_ball",
    "rb_add",
    "rb_add_scalar",
    "rb_contains",
    "rb_lower",
    "rb_mul",
    "rb_mul_scalar",
    "rb_neg",
    "rb_sub",
    "rb_upper",
    "rb_width",
    "DOUBLE",
    "DOUBLE_UNIT_ROUNDOFF",
    "SAFETY_FACTOR",
    "RoundingModel",
    "local_rounding_bound",
    "radius_inflation",
    "round_up",
]
