"""Point and plain-interval Clenshaw recurrences, and the Reinsch variant.

All recurrences run u_{n+1} = 0, u_n = a_n and, for n > k >= 1,

    u_k = 2x u_{k+1} - u_{k+2} + a_k

with the half-weight final step p(x) = x u_1 - u_2 + a_0. The floating-point
operation order here is shared with the ball evaluators, so a ball center
always equals the point value computed at that center.
"""

import math
from typing import Iterator

from chebball.ball.real import RealBall, rb_add_scalar, rb_mul, rb_mul_scalar, rb_sub, real_ball
from chebball.ball.rounding import DOUBLE, RoundingModel, local_rounding_bound, round_up
from chebball.errors import RangeExceededError
from chebball.evaluate.series import ChebyshevSeries, chebyshev_t_values, degree
from chebball.struct import struct


@struct
class ReinschState:
    """One step of the Reinsch recurrence: u_k = d_k + u_{k+1}."""

    d: float
    u: float


def clenshaw_values(p: ChebyshevSeries, x: float) -> tuple[float, ...]:
    """The intermediates u_0(x), ..., u_n(x), indexed by k."""
    coeffs = p.coeffs
    n = len(coeffs) - 1
    u = [0.0] * (n + 1)
    u[n] = coeffs[n]
    if n == 0:
        return tuple(u)
    two_x = 2.0 * x
    u1, u2 = coeffs[n], 0.0
    for k in range(n - 1, 0, -1):
        t1 = two_x * u1
        t2 = t1 - u2
        uk = t2 + coeffs[k]
        u[k] = uk
        u1, u2 = uk, u1
    t1 = x * u1
    t2 = t1 - u2
    u[0] = t2 + coeffs[0]
    if not all(math.isfinite(v) for v in u):
        raise RangeExceededError("clenshaw")
    return tuple(u)


def clenshaw_point(p: ChebyshevSeries, x: float) -> float:
    """Evaluate p(x) by the Clenshaw recurrence in working precision."""
    return clenshaw_values(p, x)[0]


def naive_interval_steps(
    p: ChebyshevSeries, x: RealBall, model: RoundingModel = DOUBLE
) -> Iterator[tuple[int, RealBall]]:
    """Yield (k, u_k) for k = n..0 with every operation done in ball arithmetic.

    The widths grow like Fibonacci numbers; the first step whose ball leaves
    the float range raises RangeExceededError.
    """
    coeffs = p.coeffs
    n = len(coeffs) - 1
    u1 = RealBall(center=coeffs[n])
    yield n, u1
    if n == 0:
        return
    two_x = rb_mul_scalar(2.0, x, model)
    u2 = RealBall(center=0.0)
    for k in range(n - 1, 0, -1):
        uk = rb_add_scalar(rb_sub(rb_mul(two_x, u1, model), u2, model), coeffs[k], model)
        yield k, uk
        u1, u2 = uk, u1
    yield 0, rb_add_scalar(rb_sub(rb_mul(x, u1, model), u2, model), coeffs[0], model)


def clenshaw_naive_interval(
    p: ChebyshevSeries, x: RealBall, model: RoundingModel = DOUBLE
) -> RealBall:
    """Enclosure of p over x by plain interval Clenshaw; sound but very loose."""
    result = RealBall(center=p.coeffs[0])
    for _, ball in naive_interval_steps(p, x, model):
        result = ball
    return result


def reinsch_trace(p: ChebyshevSeries, x: float) -> tuple[ReinschState, ...]:
    """The (d_k, u_k) pairs for k = n..1."""
    coeffs = p.coeffs
    n = len(coeffs) - 1
    if n == 0:
        return ()
    two_h = 2.0 * (x - 1.0)
    d, u = coeffs[n], coeffs[n]
    states = [ReinschState(d=d, u=u)]
    for k in range(n - 1, 0, -1):
        d = (two_h * u + d) + coeffs[k]
        u = d + u
        states.append(ReinschState(d=d, u=u))
    return tuple(states)


def reinsch_eval(p: ChebyshevSeries, x: float, model: RoundingModel = DOUBLE) -> RealBall:
    """Evaluate p(x) by the Reinsch recurrence with a running error bound.

    The recurrence carries the differences d_k = u_k - u_{k+1} instead of
    u_{k+2}, which keeps the cancellation of 2x u_{k+1} - u_{k+2} out of the
    loop when x is close to 1. The returned ball contains the exact p(x).
    """
    coeffs = p.coeffs
    n = len(coeffs) - 1
    if n == 0:
        return real_ball(coeffs[0], 0.0, "reinsch")

    h = x - 1.0
    two_h = 2.0 * h
    unit = model.unit_roundoff
    # x - 1 is exact for x in [0.5, 2]
    err_h = 0.0 if 0.5 <= x <= 2.0 else unit * abs(h)
    d, u = coeffs[n], coeffs[n]
    err_d, err_u = 0.0, 0.0
    for k in range(n - 1, 0, -1):
        t1 = two_h * u
        t2 = t1 + d
        d_next = t2 + coeffs[k]
        err_d = round_up(
            model,
            abs(two_h) * err_u
            + 2.0 * err_h * abs(u)
            + err_d
            + local_rounding_bound(model, (abs(t1), abs(t2), abs(d_next))),
        )
        u_next = d_next + u
        err_u = round_up(model, err_d + err_u + 2.0 * unit * abs(u_next))
        d, u = d_next, u_next
    t1 = h * u
    t2 = t1 + d
    value = t2 + coeffs[0]
    err = round_up(
        model,
        abs(h) * err_u
        + err_h * abs(u)
        + err_d
        + local_rounding_bound(model, (abs(t1), abs(t2), abs(value))),
    )
    return real_ball(value, err, "reinsch")


def reinsch_point(p: ChebyshevSeries, x: float) -> float:
    """Evaluate p(x) by the Reinsch recurrence, intended for x near 1."""
    return reinsch_eval(p, x).center


def elliott_identity_check(p: ChebyshevSeries, a: float, x: float) -> float:
    """Right-hand side of p(a) - p(x) = 2g sum_{i=1..n} u_i(a) T_{i-1}(x) - g u_1(a), g = a - x.

    Used as an oracle for the backward radius recurrence.
    """
    n = degree(p)
    if n == 0:
        return 0.0
    gamma = a - x
    u = clenshaw_values(p, a)
    t = chebyshev_t_values(n - 1, x)
    total = math.fsum(u[i] * t[i - 1] for i in range(1, n + 1))
    return 2.0 * gamma * total - gamma * u[1]
