"""Clenshaw evaluation over a real ball B(a, r), forward and backward radii.

Both variants compute the centers u_k(a) with the point recurrence and a
local rounding bound eps_k per step. They differ in how the radius e_k of
u_k over B(a, r) is propagated:

* forward: tracks a complex radius f_k for the rotated auxiliary sequence
  z_k alongside e_k, and intersects the two resulting bounds when |a| < 1;
* backward: bounds p(a) - p(x) through the Elliott identity, which gives
  a radius linear in n, valid for balls inside [-1, 1].
"""

import logging
import math

from chebball.ball.real import RealBall, real_ball
from chebball.ball.rounding import SAFETY_FACTOR, RoundingModel, radius_inflation
from chebball.errors import RangeExceededError
from chebball.evaluate.series import ChebyshevSeries
from chebball.operand import cases
from chebball.struct import struct, trait

logger = logging.getLogger(__name__)


@cases
class Variant:
    """Radius propagation scheme for ball Clenshaw evaluation."""

    Forward: None
    Backward: None


@struct
class EvalTrace:
    """Per-index sequences of one ball evaluation.

    ``u[k]`` is u_k(a) for k = 0..n, ``eps[k]`` the rounding bound of step k
    for k = 0..n-1, ``e[k]`` and ``f[k]`` the real and complex radii for
    k = 0..n. ``f`` is empty for the backward variant.
    """

    u: tuple[float, ...]
    eps: tuple[float, ...]
    e: tuple[float, ...]
    f: tuple[float, ...]


@struct
class ConjugateRootPair:
    """The root gamma = re + i im of X^2 - 2aX + 1 (the other is its conjugate)."""

    re: float
    im: float


def conjugate_root_pair(a: float) -> ConjugateRootPair | None:
    """Roots of X^2 - 2aX + 1 = 0; they lie on the unit circle iff |a| <= 1."""
    if abs(a) > 1.0:
        return None
    return ConjugateRootPair(re=a, im=math.sqrt(one_minus_square(a)))


def one_minus_square(a: float) -> float:
    """1 - a^2 without the cancellation of a*a near |a| = 1."""
    m = abs(a)
    if m < 0.5:
        return 1.0 - a * a
    return max((1.0 - m) * (1.0 + m), 0.0)


def sine_lower_bound(a: float, model: RoundingModel) -> float:
    """A lower bound on sqrt(1 - a^2), or 0.0 when the min-branch must be skipped."""
    if abs(a) >= 1.0:
        return 0.0
    v = one_minus_square(a)
    if v <= 8.0 * model.unit_roundoff:
        return 0.0
    return math.sqrt(v) * (1.0 - 4.0 * model.unit_roundoff)


def real_root_bound(a: float, model: RoundingModel) -> float:
    """An upper bound on |a| + sqrt(a^2 - 1) for |a| > 1, exactly 1.0 otherwise."""
    m = abs(a)
    if m <= 1.0:
        return 1.0
    infl = radius_inflation(model)
    return ((m + math.sqrt((m - 1.0) * (m + 1.0))) * infl) * infl


def _check_ball_request(a: float, r: float) -> None:
    if not (math.isfinite(a) and math.isfinite(r)):
        raise RangeExceededError("ball_clenshaw input")
    if r < 0.0:
        raise ValueError(f"radius must be non-negative, got {r!r}")


def _finish(u0: float, e0: float, trace: EvalTrace, where: str) -> tuple[RealBall, EvalTrace]:
    if not all(math.isfinite(v) for v in trace.u + trace.e + trace.f):
        raise RangeExceededError(where)
    return real_ball(u0, e0, where), trace


@trait
def ball_clenshaw(
    variant: Variant, p: ChebyshevSeries, a: float, r: float, model: RoundingModel
) -> tuple[RealBall, EvalTrace]:
    """Enclose p over B(a, r) with the given radius propagation scheme."""


@ball_clenshaw.impl(Variant.Forward)
def _forward(
    variant: Variant, p: ChebyshevSeries, a: float, r: float, model: RoundingModel
) -> tuple[RealBall, EvalTrace]:
    return ball_clenshaw_forward(p, a, r, model)


@ball_clenshaw.impl(Variant.Backward)
def _backward(
    variant: Variant, p: ChebyshevSeries, a: float, r: float, model: RoundingModel
) -> tuple[RealBall, EvalTrace]:
    return ball_clenshaw_backward(p, a, r, model)


def ball_clenshaw_forward(
    p: ChebyshevSeries, a: float, r: float, model: RoundingModel
) -> tuple[RealBall, EvalTrace]:
    """Forward variant: e_k = min(e_{k+1} + f_k, f_k / sqrt(1 - a^2)) + eps_k.

    eps_k also enters f_k, since the rounding error of u_k moves z_k too.
    For |a| > 1 the real root gamma of X^2 - 2aX + 1 with |gamma| > 1 scales
    the carried radius, e_k = |gamma| e_{k+1} + f_k + eps_k, and the last
    step reads e_0 = |a| f_1 + |a gamma| e_2 + r(|u_1| + e_1) + eps_0.
    """
    _check_ball_request(a, r)
    coeffs = p.coeffs
    n = len(coeffs) - 1
    if n == 0:
        trace = EvalTrace(u=(coeffs[0],), eps=(), e=(0.0,), f=(0.0,))
        return _finish(coeffs[0], 0.0, trace, "ball_clenshaw_forward")

    two_u = SAFETY_FACTOR * model.unit_roundoff
    infl = radius_inflation(model)
    s = sine_lower_bound(a, model)
    g = real_root_bound(a, model)
    two_x = 2.0 * a
    two_r = 2.0 * r

    u = [0.0] * (n + 1)
    eps = [0.0] * n
    e = [0.0] * (n + 1)
    f = [0.0] * (n + 1)
    u[n] = coeffs[n]
    u1, u2 = coeffs[n], 0.0
    for k in range(n - 1, 0, -1):
        t1 = two_x * u1
        t2 = t1 - u2
        uk = t2 + coeffs[k]
        eps_k = (abs(t1) + abs(t2) + abs(uk)) * two_u
        fmid = (two_r * (abs(u1) + e[k + 1])) * infl
        fk = (fmid + f[k + 1] + eps_k) * infl
        ek = (min(g * e[k + 1] + fk, fk / s if s > 0.0 else math.inf) + eps_k) * infl
        u[k], eps[k], e[k], f[k] = uk, eps_k, ek, fk
        u1, u2 = uk, u1

    t1 = a * u1
    t2 = t1 - u2
    u0 = t2 + coeffs[0]
    eps0 = (abs(t1) + abs(t2) + abs(u0)) * two_u
    fmid = (r * (abs(u1) + 2.0 * e[1])) * infl
    f0 = (fmid + f[1] + eps0) * infl
    if g > 1.0:
        e2 = e[2] if n >= 2 else 0.0
        carried = abs(a) * f[1] + (abs(a) * g) * infl * e2
        e0 = ((carried + r * (abs(u1) + e[1]) + eps0) * infl) * infl
    else:
        e0 = (min(e[1] + f0, f0 / s if s > 0.0 else math.inf) + eps0) * infl
    u[0], eps[0], e[0], f[0] = u0, eps0, e0, f0

    trace = EvalTrace(u=tuple(u), eps=tuple(eps), e=tuple(e), f=tuple(f))
    return _finish(u0, e0, trace, "ball_clenshaw_forward")


def ball_clenshaw_backward(
    p: ChebyshevSeries, a: float, r: float, model: RoundingModel
) -> tuple[RealBall, EvalTrace]:
    """Backward variant: e_k = e_{k+1} + 2r|u_{k+1}| + eps_k, e_0 = e_1 + r|u_1| + eps_0.

    The bound relies on |T_i(x)| <= 1, so balls reaching outside [-1, 1] are
    handed to the forward variant.
    """
    _check_ball_request(a, r)
    if a + r > 1.0 or a - r < -1.0:
        logger.debug("B(%r, %r) leaves [-1, 1], using forward radii", a, r)
        return ball_clenshaw_forward(p, a, r, model)

    coeffs = p.coeffs
    n = len(coeffs) - 1
    if n == 0:
        trace = EvalTrace(u=(coeffs[0],), eps=(), e=(0.0,), f=())
        return _finish(coeffs[0], 0.0, trace, "ball_clenshaw_backward")

    two_u = SAFETY_FACTOR * model.unit_roundoff
    infl = radius_inflation(model)
    two_x = 2.0 * a
    two_r = 2.0 * r

    u = [0.0] * (n + 1)
    eps = [0.0] * n
    e = [0.0] * (n + 1)
    u[n] = coeffs[n]
    u1, u2 = coeffs[n], 0.0
    for k in range(n - 1, 0, -1):
        t1 = two_x * u1
        t2 = t1 - u2
        uk = t2 + coeffs[k]
        eps_k = (abs(t1) + abs(t2) + abs(uk)) * two_u
        e[k] = (e[k + 1] + two_r * abs(u1) + eps_k) * infl
        u[k], eps[k] = uk, eps_k
        u1, u2 = uk, u1

    t1 = a * u1
    t2 = t1 - u2
    u0 = t2 + coeffs[0]
    eps0 = (abs(t1) + abs(t2) + abs(u0)) * two_u
    e0 = (e[1] + r * abs(u1) + eps0) * infl
    u[0], eps[0], e[0] = u0, eps0, e0

    trace = EvalTrace(u=tuple(u), eps=tuple(eps), e=tuple(e), f=())
    return _finish(u0, e0, trace, "ball_clenshaw_backward")
