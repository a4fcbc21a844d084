"""Plain interval Clenshaw against the backward ball variant on p = T_n.

At x = B(1/2, eps) the naive recurrence multiplies by an interval 2x of
width 4 eps around 1, so the width of u_{n-k} obeys w_k >= w_{k-1} + w_{k-2}
with w_1 = 4 eps: at least 4 eps F_k, with F_k the Fibonacci numbers. The
backward radius stays below 3 M n eps.
"""

import logging

from chebball.ball.real import RealBall, rb_width
from chebball.ball.rounding import DOUBLE, RoundingModel
from chebball.errors import RangeExceededError
from chebball.evaluate.ball_clenshaw import ball_clenshaw_backward
from chebball.evaluate.clenshaw import naive_interval_steps
from chebball.evaluate.series import ChebyshevSeries
from chebball.struct import struct

logger = logging.getLogger(__name__)

BLOWUP_CENTER = 0.5


@struct
class BlowupRow:
    """Widths at u_{n-k}; ``naive_width`` is None once the naive ball overflowed."""

    k: int
    naive_width: float | None
    fibonacci_floor: float
    ball_width: float


@struct
class BlowupReport:
    n: int
    epsilon: float
    rows: tuple[BlowupRow, ...]
    backward_radius: float
    linear_bound: float


def fibonacci_floor(k: int, epsilon: float) -> float:
    """4 eps F_k with F_1 = F_2 = 1; inf once F_k leaves the float range."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    try:
        return 4.0 * epsilon * float(a)
    except OverflowError:
        return float("inf")


def chebyshev_basis(n: int) -> ChebyshevSeries:
    """The series of T_n alone."""
    return ChebyshevSeries(coeffs=[0.0] * n + [1.0])


def blowup_demo(n: int, epsilon: float, model: RoundingModel = DOUBLE) -> BlowupReport:
    """Rows for the interior steps k = 1..n-1 (u_{n-1} down to u_1)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not epsilon > 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    p = chebyshev_basis(n)

    naive: dict[int, float] = {}
    try:
        for index, ball in naive_interval_steps(p, RealBall(center=BLOWUP_CENTER, radius=epsilon), model):
            naive[n - index] = rb_width(ball)
    except RangeExceededError:
        logger.warning("naive interval overflowed after k = %d", max(naive))

    ball, trace = ball_clenshaw_backward(p, BLOWUP_CENTER, epsilon, model)
    rows = [
        BlowupRow(
            k=k,
            naive_width=naive.get(k),
            fibonacci_floor=fibonacci_floor(k, epsilon),
            ball_width=2.0 * trace.e[n - k],
        )
        for k in range(1, n)
    ]
    m = max(abs(v) for v in trace.u[1:])
    return BlowupReport(
        n=n,
        epsilon=epsilon,
        rows=rows,
        backward_radius=ball.radius,
        linear_bound=3.0 * m * n * epsilon,
    )
