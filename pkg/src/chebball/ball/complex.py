"""Complex balls with a real (Euclidean) radius, and unit rotations of them."""

import math

from chebball.ball.rounding import RoundingModel, local_rounding_bound, round_up
from chebball.errors import InvalidRotationError, RangeExceededError
from chebball.struct import struct

_AXIS_ROTATIONS = {(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)}


def _check_complex_ball(ball: "ComplexBall") -> None:
    values = (ball.center_re, ball.center_im, ball.radius)
    if not all(math.isfinite(v) for v in values):
        raise RangeExceededError("ComplexBall")
    if ball.radius < 0.0:
        raise ValueError(f"radius must be non-negative, got {ball.radius!r}")


@struct(invariant=_check_complex_ball)
class ComplexBall:
    """The disc {z : |z - center| <= radius} in the complex plane."""

    center_re: float
    center_im: float
    radius: float = 0.0


def cb_contains(z: ComplexBall, re: float, im: float) -> bool:
    return math.hypot(re - z.center_re, im - z.center_im) <= z.radius


def cb_rotate(gamma_re: float, gamma_im: float, z: ComplexBall, model: RoundingModel) -> ComplexBall:
    """Multiply ``z`` by the unit complex number ``gamma``.

    Quarter turns are exact and keep the radius as is. Any other rotation
    adds the rounding error of the rotated center, and allows for |gamma|
    exceeding 1 by the 8u that the modulus check tolerates.
    """
    u = model.unit_roundoff
    if abs(gamma_re * gamma_re + gamma_im * gamma_im - 1.0) > 16.0 * u:
        raise InvalidRotationError(gamma_re, gamma_im)

    if (gamma_re, gamma_im) in _AXIS_ROTATIONS:
        re = gamma_re * z.center_re - gamma_im * z.center_im
        im = gamma_re * z.center_im + gamma_im * z.center_re
        return ComplexBall(center_re=re, center_im=im, radius=z.radius)

    rr = gamma_re * z.center_re
    ii = gamma_im * z.center_im
    ri = gamma_re * z.center_im
    ir = gamma_im * z.center_re
    re = rr - ii
    im = ri + ir
    if not (math.isfinite(re) and math.isfinite(im)):
        raise RangeExceededError("cb_rotate")
    slack = local_rounding_bound(model, (abs(rr), abs(ii), abs(re), abs(ri), abs(ir), abs(im)))
    radius = round_up(model, z.radius * (1.0 + 8.0 * u) + slack)
    return ComplexBall(center_re=re, center_im=im, radius=radius)
