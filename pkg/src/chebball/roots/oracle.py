"""Dense-sampling sign-change oracle, for tests."""

import numpy as np
from numpy.polynomial import chebyshev
from numpy.typing import NDArray

from chebball.evaluate.series import ChebyshevSeries, coeff_array


def sign_change_locations(p: ChebyshevSeries, samples: int = 1_000_000) -> NDArray[np.float64]:
    """Midpoints of the grid cells of a uniform grid on [-1, 1] where p changes sign.

    Exact zeros on the grid are dropped before comparing neighbours.
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    grid = np.linspace(-1.0, 1.0, samples)
    values = chebyshev.chebval(grid, coeff_array(p))
    nonzero = values != 0.0
    grid, values = grid[nonzero], values[nonzero]
    flips = np.flatnonzero(np.signbit(values[:-1]) != np.signbit(values[1:]))
    return 0.5 * (grid[flips] + grid[flips + 1])


def count_sign_changes(p: ChebyshevSeries, samples: int = 1_000_000) -> int:
    return int(sign_change_locations(p, samples).size)
