"""A priori bound on the forward-variant radius, in three regimes of n."""

import math

from chebball.errors import RangeExceededError, RegimeUndefinedError
from chebball.evaluate.ball_clenshaw import one_minus_square
from chebball.operand import as_result, cases
from chebball.struct import struct


@cases
class Regime:
    """Which of the three growth regimes n falls into for given (a, r)."""

    SmallN: None
    MidN: None
    LargeN: None


def _check_regime(value: "ForwardBoundRegime") -> None:
    if value.n < 1:
        raise ValueError(f"n must be at least 1, got {value.n}")
    if not (value.M > 0.0 and value.r > 0.0 and value.bound > 0.0):
        raise ValueError("M, r and bound must be positive")


@struct(invariant=_check_regime)
class ForwardBoundRegime:
    """Bound on the forward radius e, valid when every eps_k < M r.

    ``M`` bounds |u_k(a)| for 1 <= k <= n.
    """

    M: float
    n: int
    a: float
    r: float
    bound: float
    regime: Regime


def _select(M: float, n: int, a: float, r: float) -> ForwardBoundRegime:
    if not (M > 0.0 and n >= 1 and r > 0.0):
        raise ValueError(f"need M > 0, n >= 1, r > 0 (got M={M!r}, n={n!r}, r={r!r})")
    if not abs(a) < 1.0:
        raise RegimeUndefinedError(a)
    s = math.sqrt(one_minus_square(a))
    if s == 0.0:
        raise RegimeUndefinedError(a)

    if n < 1.0 / (2.0 * s):
        regime, bound = Regime.SmallN, 2.0 * M * n * n * r
    elif n < s / (2.0 * r):
        regime, bound = Regime.MidN, 9.0 * M * n * r / s
    else:
        try:
            growth = math.expm1(n * math.log1p(2.0 * r / s))
        except OverflowError as exc:
            raise RangeExceededError("forward_radius_bound") from exc
        regime, bound = Regime.LargeN, 2.0 * M * growth
    if not math.isfinite(bound):
        raise RangeExceededError("forward_radius_bound")
    return ForwardBoundRegime(M=M, n=n, a=a, r=r, bound=bound, regime=regime)


@as_result
def forward_radius_bound(M: float, n: int, a: float, r: float) -> ForwardBoundRegime:
    """Select the regime of n against 1/(2 sqrt(1-a^2)) and sqrt(1-a^2)/(2r).

    small_n: e < 2 M n^2 r
    mid_n:   e < 9 M n r / sqrt(1-a^2)
    large_n: e < 2 M ((1 + 2r/sqrt(1-a^2))^n - 1)
    """
    return _select(M, n, a, r)
