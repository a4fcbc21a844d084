"""Seeded random Chebyshev series with i.i.d. N(0, 1) coefficients."""

import numpy as np

from chebball.evaluate.series import ChebyshevSeries


def gen_random(degree: int, seed: int) -> ChebyshevSeries:
    """degree + 1 standard normal coefficients.

    The stream is PCG64 seeded with ``seed`` and drawn with numpy's ziggurat
    ``standard_normal``, so (degree, seed) fixes the series on every platform.
    """
    if degree < 1:
        raise ValueError(f"degree must be at least 1, got {degree}")
    rng = np.random.Generator(np.random.PCG64(seed))
    return ChebyshevSeries(coeffs=rng.standard_normal(degree + 1).tolist())
