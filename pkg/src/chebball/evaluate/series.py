"""Chebyshev series p(x) = sum a_k T_k(x) and coefficient-level operations."""

import math

import numpy as np
from numpy.typing import NDArray

from chebball.ball.rounding import SAFETY_FACTOR, RoundingModel, round_up
from chebball.struct import struct


def _check_series(series: "ChebyshevSeries") -> None:
    if not series.coeffs:
        raise ValueError("a Chebyshev series needs at least one coefficient")
    if not all(math.isfinite(c) for c in series.coeffs):
        raise ValueError("Chebyshev coefficients must be finite")


@struct(invariant=_check_series)
class ChebyshevSeries:
    """Coefficients a_0..a_n; trailing zeros are kept, the degree is formal."""

    coeffs: tuple[float, ...]


def series_of(*coeffs: float) -> ChebyshevSeries:
    return ChebyshevSeries(coeffs=coeffs)


def degree(p: ChebyshevSeries) -> int:
    return len(p.coeffs) - 1


def coeff_array(p: ChebyshevSeries) -> NDArray[np.float64]:
    return np.asarray(p.coeffs, dtype=np.float64)


def derivative_coeffs(p: ChebyshevSeries) -> ChebyshevSeries:
    """Coefficients of p' by the downward recurrence b_{k-1} = b_{k+1} + 2k a_k."""
    n = degree(p)
    if n == 0:
        return ChebyshevSeries(coeffs=(0.0,))
    b = [0.0] * (n + 2)
    for k in range(n, 0, -1):
        b[k - 1] = b[k + 1] + (2.0 * k) * p.coeffs[k]
    b[0] *= 0.5
    return ChebyshevSeries(coeffs=tuple(b[:n]))


def derivative_error_bound(p: ChebyshevSeries, model: RoundingModel) -> float:
    """Bound on |computed p' - exact p'| anywhere on [-1, 1].

    Each computed b_k carries an absolute error delta_k from the recurrence;
    since |T_k| <= 1 on [-1, 1] the evaluation error is at most sum delta_k.
    """
    n = degree(p)
    if n == 0:
        return 0.0
    u = model.unit_roundoff
    b = [0.0] * (n + 2)
    delta = [0.0] * (n + 2)
    for k in range(n, 0, -1):
        term = (2.0 * k) * p.coeffs[k]
        b[k - 1] = b[k + 1] + term
        delta[k - 1] = delta[k + 1] + u * abs(term) + u * abs(b[k - 1])
    # halving b_0 is exact and halves its error
    delta[0] *= 0.5
    return round_up(model, SAFETY_FACTOR * math.fsum(delta[:n]))


def chebyshev_t_values(n: int, x: float) -> tuple[float, ...]:
    """T_0(x), ..., T_n(x) by the three-term recurrence."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    values = [1.0, x][: n + 1]
    for _ in range(2, n + 1):
        values.append(2.0 * x * values[-1] - values[-2])
    return tuple(values)
