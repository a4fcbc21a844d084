"""Sign certificates on balls and the per-interval classification step.

The solver classifies whole generations at once through ``verdict_codes``
and ``halve``; the scalar entry points here are thin views of the same two
functions.
"""

import numpy as np
from numpy.typing import NDArray

from chebball.ball.real import RealBall
from chebball.evaluate.ball_clenshaw import ball_clenshaw
from chebball.evaluate.series import ChebyshevSeries
from chebball.roots.config import SolverConfig
from chebball.roots.labels import Sign, Verdict

FloatArray = NDArray[np.float64]

PLUS, MINUS, RISING, FALLING, SPLIT = range(5)
CODE_VERDICTS = (
    Verdict.Plus,
    Verdict.Minus,
    Verdict.Monotonous,
    Verdict.Monotonous,
    Verdict.Split,
)


def ball_sign(b: RealBall) -> Sign:
    if b.center - b.radius > 0.0:
        return Sign.Plus
    if b.center + b.radius < 0.0:
        return Sign.Minus
    return Sign.Unknown


def verdict_codes(
    f_centers: FloatArray, f_radii: FloatArray, df_centers: FloatArray, df_radii: FloatArray
) -> NDArray[np.int64]:
    """One code per ball, decided in the same order as ``verdict_of``."""
    return np.select(
        [
            f_centers - f_radii > 0.0,
            f_centers + f_radii < 0.0,
            df_centers - df_radii > 0.0,
            df_centers + df_radii < 0.0,
        ],
        [PLUS, MINUS, RISING, FALLING],
        default=SPLIT,
    )


def verdict_of(f_center: float, f_radius: float, df_center: float, df_radius: float) -> Verdict:
    """Plus/minus when f's ball excludes 0, monotonous when f''s does, else split."""
    code = verdict_codes(
        np.array([f_center]), np.array([f_radius]), np.array([df_center]), np.array([df_radius])
    )
    return CODE_VERDICTS[int(code[0])]


def classify_interval(
    f: ChebyshevSeries,
    df: ChebyshevSeries,
    a: float,
    r: float,
    cfg: SolverConfig,
    df_slack: float = 0.0,
) -> Verdict:
    """Classify B(a, r) from ball evaluations of f and df.

    ``df_slack`` bounds the error of df's coefficients when they were
    computed from f in floating point.
    """
    fb, _ = ball_clenshaw(cfg.variant, f, a, r, cfg.model)
    db, _ = ball_clenshaw(cfg.variant, df, a, r, cfg.model)
    return verdict_of(fb.center, fb.radius, db.center, db.radius + df_slack)


def halve(centers: FloatArray, radii: FloatArray) -> tuple[FloatArray, FloatArray]:
    """Both halves of every ball, left before right, in input order."""
    half = 0.5 * radii
    return np.column_stack((centers - half, centers + half)).ravel(), np.repeat(half, 2)


def subdivide(a: float, r: float) -> tuple[RealBall, RealBall]:
    """Halve B(a, r); both halves are exact for dyadic a and r."""
    if not r > 0.0:
        raise ValueError(f"cannot subdivide a ball of radius {r!r}")
    centers, radii = halve(np.array([a]), np.array([r]))
    (lo, hi), (r_lo, r_hi) = centers.tolist(), radii.tolist()
    return RealBall(center=lo, radius=r_lo), RealBall(center=hi, radius=r_hi)
