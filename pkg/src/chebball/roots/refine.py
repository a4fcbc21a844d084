"""Bisection inside a certified isolating interval."""

import logging

from chebball.ball.rounding import DOUBLE, RoundingModel
from chebball.errors import IndeterminateMidpointError
from chebball.evaluate.ball_clenshaw import ball_clenshaw_backward
from chebball.evaluate.series import ChebyshevSeries
from chebball.operand import as_result
from chebball.roots.classify import ball_sign
from chebball.roots.labels import IsolatingInterval, Sign
from chebball.struct import evolve

logger = logging.getLogger(__name__)


def _sign_at(f: ChebyshevSeries, x: float, model: RoundingModel) -> Sign:
    ball, _ = ball_clenshaw_backward(f, x, 0.0, model)
    return ball_sign(ball)


def _split_point(
    f: ChebyshevSeries, iv: IsolatingInterval, model: RoundingModel
) -> tuple[float, Sign]:
    """Find a point strictly inside iv with a certified sign.

    The midpoint comes first; when its ball straddles zero the points a
    quarter of the way towards each end are tried.
    """
    mid = 0.5 * (iv.lo + iv.hi)
    if not iv.lo < mid < iv.hi:
        raise IndeterminateMidpointError(iv, "bracket cannot shrink in floating point")
    sign = _sign_at(f, mid, model)
    if sign is not Sign.Unknown:
        return mid, sign
    step = 0.125 * (iv.hi - iv.lo)
    for x in (mid - step, mid + step):
        if iv.lo < x < iv.hi:
            sign = _sign_at(f, x, model)
            if sign is not Sign.Unknown:
                logger.debug("midpoint %r undecided, %r decided", mid, x)
                return x, sign
    raise IndeterminateMidpointError(iv, f"sign of f undecided around {mid!r}")


@as_result
def refine(
    f: ChebyshevSeries, iv: IsolatingInterval, width: float, model: RoundingModel = DOUBLE
) -> IsolatingInterval:
    """Shrink iv to width at most ``width`` around the same root.

    The endpoint signs are kept; each step keeps the half whose endpoints
    still have opposite certified signs. An undecidable step returns
    Error(IndeterminateMidpointError) whose ``interval`` is the tightest
    bracket reached.
    """
    if not width > 0.0:
        raise ValueError(f"width must be positive, got {width!r}")
    while iv.hi - iv.lo > width:
        x, sign = _split_point(f, iv, model)
        iv = evolve(iv, lo=x) if sign == iv.sign_left else evolve(iv, hi=x)
    return iv
