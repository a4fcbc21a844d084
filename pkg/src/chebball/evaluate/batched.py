"""Vectorised ball Clenshaw over many balls and several series at once.

``coeffs`` has shape (n + 1, S): column j holds the coefficients of series j.
``centers`` and ``radii`` have shape (B,). Results have shape (S, B). The
center of every output ball is bit-identical to the scalar evaluators.

Overflow is reported as RangeExceededError from the finished arrays, so the
kernels run with numpy's overflow and invalid warnings silenced.
"""

import logging

import numpy as np
from numpy.typing import NDArray

from chebball.ball.rounding import SAFETY_FACTOR, RoundingModel, radius_inflation
from chebball.errors import RangeExceededError
from chebball.evaluate.ball_clenshaw import Variant
from chebball.struct import trait

logger = logging.getLogger(__name__)

FloatArray = NDArray[np.float64]


def _prepare(
    coeffs: FloatArray, centers: FloatArray, radii: FloatArray
) -> tuple[FloatArray, FloatArray, FloatArray]:
    c = np.asarray(coeffs, dtype=np.float64)
    if c.ndim == 1:
        c = c[:, None]
    if c.ndim != 2 or c.shape[0] == 0:
        raise ValueError(f"coeffs must have shape (n + 1, S), got {c.shape}")
    x = np.asarray(centers, dtype=np.float64)
    r = np.asarray(radii, dtype=np.float64)
    if x.shape != r.shape or x.ndim != 1:
        raise ValueError("centers and radii must be 1-d arrays of equal length")
    if np.any(r < 0.0):
        raise ValueError("radii must be non-negative")
    # (n + 1, S, 1) broadcasts against (B,) into (S, B) per step
    return c[:, :, None], x, r


def _check_finite(*arrays: FloatArray) -> None:
    for array in arrays:
        if not np.all(np.isfinite(array)):
            raise RangeExceededError("batch_ball_clenshaw")


@trait
def batch_ball_clenshaw(
    variant: Variant,
    coeffs: FloatArray,
    centers: FloatArray,
    radii: FloatArray,
    model: RoundingModel,
) -> tuple[FloatArray, FloatArray]:
    """Evaluate every series over every ball; returns (centers, radii) of shape (S, B)."""


@batch_ball_clenshaw.impl(Variant.Backward)
def _backward(
    variant: Variant,
    coeffs: FloatArray,
    centers: FloatArray,
    radii: FloatArray,
    model: RoundingModel,
) -> tuple[FloatArray, FloatArray]:
    """Backward radii in closed form.

    Summing the recurrence gives e_0 = r|u_1| + 2r sum_{k>=2} |u_k| + sum eps_k,
    and every eps_k is at most 12u times the local |u| terms, so
    e_0 <= (2r + 13u) * sum_{k=0..n} |u_k| up to the accumulation error of
    that sum. Only the running sum is kept, which makes the loop a handful
    of array operations per coefficient.
    """
    c, x, r = _prepare(coeffs, centers, radii)
    if np.any(x + r > 1.0) or np.any(x - r < -1.0):
        raise ValueError("backward batch evaluation needs balls inside [-1, 1]")
    with np.errstate(over="ignore", invalid="ignore"):
        return _backward_kernel(c, x, r, model)


def _backward_kernel(
    c: FloatArray, x: FloatArray, r: FloatArray, model: RoundingModel
) -> tuple[FloatArray, FloatArray]:
    n = c.shape[0] - 1
    unit = model.unit_roundoff
    shape = (c.shape[1], x.shape[0])

    u1 = np.array(np.broadcast_to(c[n], shape))
    total = np.abs(u1)
    if n == 0:
        _check_finite(u1, total)
        return u1, np.zeros(shape)

    u2 = np.zeros(shape)
    scratch = np.empty(shape)
    two_x = 2.0 * x
    for k in range(n - 1, 0, -1):
        np.multiply(two_x, u1, out=scratch)
        np.subtract(scratch, u2, out=scratch)
        np.add(scratch, c[k], out=u2)
        u1, u2 = u2, u1
        np.abs(u1, out=scratch)
        np.add(total, scratch, out=total)

    u0 = (x * u1 - u2) + c[0]
    total += np.abs(u0)
    _check_finite(u0, total)
    growth = (1.0 + 2.0 * (n + 2) * unit) * radius_inflation(model)
    radius = ((2.0 * r + 13.0 * unit) * total) * growth
    _check_finite(radius)
    return u0, radius


@batch_ball_clenshaw.impl(Variant.Forward)
def _forward(
    variant: Variant,
    coeffs: FloatArray,
    centers: FloatArray,
    radii: FloatArray,
    model: RoundingModel,
) -> tuple[FloatArray, FloatArray]:
    """Forward radii, step by step as in the scalar evaluator.

    Centers must lie in [-1, 1]; the radii may reach past it.
    """
    c, x, r = _prepare(coeffs, centers, radii)
    if np.any(np.abs(x) > 1.0):
        raise ValueError("forward batch evaluation needs centers in [-1, 1]")
    with np.errstate(over="ignore", invalid="ignore"):
        return _forward_kernel(c, x, r, model)


def _forward_kernel(
    c: FloatArray, x: FloatArray, r: FloatArray, model: RoundingModel
) -> tuple[FloatArray, FloatArray]:
    n = c.shape[0] - 1
    shape = (c.shape[1], x.shape[0])
    unit = model.unit_roundoff
    two_u = SAFETY_FACTOR * unit
    infl = radius_inflation(model)

    u1 = np.array(np.broadcast_to(c[n], shape))
    if n == 0:
        _check_finite(u1)
        return u1, np.zeros(shape)

    magnitude = np.abs(x)
    v = np.where(magnitude < 0.5, 1.0 - x * x, np.maximum((1.0 - magnitude) * (1.0 + magnitude), 0.0))
    s = np.sqrt(v) * (1.0 - 4.0 * unit)
    s = np.where((magnitude >= 1.0) | (v <= 8.0 * unit), 0.0, s)
    has_sine = s > 0.0

    u2 = np.zeros(shape)
    e = np.zeros(shape)
    f = np.zeros(shape)
    by_sine = np.empty(shape)
    two_x = 2.0 * x
    two_r = 2.0 * r

    def step(t1: FloatArray, ak: FloatArray, weight_u: FloatArray, weight_e: float) -> FloatArray:
        nonlocal e, f
        t2 = t1 - u2
        uk = t2 + ak
        eps = (np.abs(t1) + np.abs(t2) + np.abs(uk)) * two_u
        fmid = (weight_u * (np.abs(u1) + weight_e * e)) * infl
        f = (fmid + f + eps) * infl
        by_sine.fill(np.inf)
        np.divide(f, s, out=by_sine, where=np.broadcast_to(has_sine, shape))
        e = (np.minimum(e + f, by_sine) + eps) * infl
        return uk

    for k in range(n - 1, 0, -1):
        uk = step(two_x * u1, c[k], two_r, 1.0)
        u1, u2 = uk, u1
    u0 = step(x * u1, c[0], r, 2.0)
    _check_finite(u0, e)
    return u0, e
