"""Unit tests for Chebyshev series records and derivative coefficients."""

import os
import sys
from fractions import Fraction

import numpy as np
import pytest
from numpy.polynomial import chebyshev

sys.path.insert(
    0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "src")
)

from chebball.ball import DOUBLE
from chebball.evaluate import (
    ChebyshevSeries,
    chebyshev_t_values,
    coeff_array,
    degree,
    derivative_coeffs,
    derivative_error_bound,
    series_of,
)


def exact_derivative(coeffs: tuple[float, ...]) -> list[Fraction]:
    n = len(coeffs) - 1
    b = [Fraction(0)] * (n + 2)
    for k in range(n, 0, -1):
        b[k - 1] = b[k + 1] + 2 * k * Fraction(coeffs[k])
    b[0] /= 2
    return b[:n]


class TestChebyshevSeries:
    """Tests for the series record."""

    def test_series_of(self) -> None:
        p = series_of(1, 2.5, -3)
        assert p.coeffs == (1.0, 2.5, -3.0)
        assert degree(p) == 2

    def test_trailing_zeros_kept(self) -> None:
        assert degree(series_of(1.0, 0.0, 0.0)) == 2

    def test_rejects_empty(self) -> None:
        with pytest.raises(ValueError, match="at least one"):
            ChebyshevSeries(coeffs=())

    def test_rejects_non_finite(self) -> None:
        with pytest.raises(ValueError, match="finite"):
            series_of(1.0, float("nan"))

    def test_coeff_array(self) -> None:
        array = coeff_array(series_of(1.0, 2.0))
        assert array.dtype == np.float64
        assert array.tolist() == [1.0, 2.0]


class TestDerivativeCoeffs:
    """Tests for derivative_coeffs."""

    def test_linear(self) -> None:
        assert derivative_coeffs(series_of(0.0, 1.0)).coeffs == (1.0,)

    def test_t2(self) -> None:
        assert derivative_coeffs(series_of(0.0, 0.0, 1.0)).coeffs == (0.0, 4.0)

    def test_constant(self) -> None:
        assert derivative_coeffs(series_of(7.0)).coeffs == (0.0,)

    def test_t3(self) -> None:
        # T_3' = 12x^2 - 3 = 3 T_0 + 6 T_2
        assert derivative_coeffs(series_of(0.0, 0.0, 0.0, 1.0)).coeffs == (3.0, 0.0, 6.0)

    def test_matches_numpy(self) -> None:
        rng = np.random.default_rng(7)
        coeffs = rng.standard_normal(40)
        ours = derivative_coeffs(ChebyshevSeries(coeffs=coeffs.tolist())).coeffs
        assert np.allclose(ours, chebyshev.chebder(coeffs), rtol=1e-12, atol=1e-10)

    def test_degree_drops_by_one(self) -> None:
        assert degree(derivative_coeffs(series_of(*range(1, 12)))) == 9


class TestDerivativeErrorBound:
    """Tests for the derivative rounding bound."""

    def test_zero_for_constant(self) -> None:
        assert derivative_error_bound(series_of(3.0), DOUBLE) == 0.0

    def test_zero_when_exact(self) -> None:
        # small integers: every recurrence step is exact, only the bound's own slack remains
        assert derivative_error_bound(series_of(0.0, 1.0), DOUBLE) <= 1e-15

    def test_bounds_coefficient_errors(self) -> None:
        rng = np.random.default_rng(11)
        for size in (5, 30, 200):
            coeffs = tuple(rng.standard_normal(size).tolist())
            p = ChebyshevSeries(coeffs=coeffs)
            computed = derivative_coeffs(p).coeffs
            exact = exact_derivative(coeffs)
            total = sum(abs(Fraction(c) - e) for c, e in zip(computed, exact))
            assert total <= Fraction(derivative_error_bound(p, DOUBLE))


class TestChebyshevTValues:
    """Tests for the three-term recurrence helper."""

    def test_at_half(self) -> None:
        assert chebyshev_t_values(3, 0.5) == (1.0, 0.5, -0.5, -1.0)

    def test_short_lengths(self) -> None:
        assert chebyshev_t_values(0, 0.3) == (1.0,)
        assert chebyshev_t_values(1, 0.3) == (1.0, 0.3)

    def test_at_one(self) -> None:
        assert chebyshev_t_values(10, 1.0) == (1.0,) * 11

    def test_matches_cosine(self) -> None:
        theta = 0.7
        values = chebyshev_t_values(20, float(np.cos(theta)))
        assert np.allclose(values, np.cos(np.arange(21) * theta), atol=1e-13)

    def test_rejects_negative(self) -> None:
        with pytest.raises(ValueError):
            chebyshev_t_values(-1, 0.0)
