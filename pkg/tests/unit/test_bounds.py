"""Unit tests for the a priori forward radius bound."""

import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(
    0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "src")
)

from chebball.ball import DOUBLE
from chebball.errors import RangeExceededError, RegimeUndefinedError
from chebball.evaluate import (
    ChebyshevSeries,
    ForwardBoundRegime,
    Regime,
    ball_clenshaw_forward,
    forward_radius_bound,
)
from chebball.types import Error, Ok


class TestRegimeSelection:
    """Tests for picking the regime and its bound."""

    def test_mid_regime(self) -> None:
        result = forward_radius_bound(1.0, 1, 0.0, 1e-3)
        assert isinstance(result, Ok)
        assert result.value.regime is Regime.MidN
        assert result.value.bound == pytest.approx(9e-3)

    def test_small_regime_near_one(self) -> None:
        match forward_radius_bound(1.0, 2, 0.999999, 1e-9):
            case Ok(value):
                assert value.regime is Regime.SmallN
                assert value.bound == pytest.approx(8e-9)
            case _:
                pytest.fail("expected a bound")

    def test_large_regime(self) -> None:
        value = forward_radius_bound(1.0, 100, 0.0, 0.05).unwrap()
        assert value.regime is Regime.LargeN
        assert value.bound == pytest.approx(2.0 * (1.1**100 - 1.0), rel=1e-12)

    def test_large_regime_starts_at_threshold(self) -> None:
        # sqrt(1 - a^2) / (2r) = 10 for a = 0, r = 0.05
        assert forward_radius_bound(1.0, 9, 0.0, 0.05).unwrap().regime is Regime.MidN
        assert forward_radius_bound(1.0, 10, 0.0, 0.05).unwrap().regime is Regime.LargeN

    def test_bound_scales_with_m(self) -> None:
        one = forward_radius_bound(1.0, 50, 0.3, 1e-6).unwrap()
        three = forward_radius_bound(3.0, 50, 0.3, 1e-6).unwrap()
        assert three.bound == pytest.approx(3.0 * one.bound)

    def test_record_fields(self) -> None:
        value = forward_radius_bound(2.0, 5, 0.5, 1e-4).unwrap()
        assert isinstance(value, ForwardBoundRegime)
        assert (value.M, value.n, value.a, value.r) == (2.0, 5, 0.5, 1e-4)


class TestFailures:
    """Tests for undefined regimes and invalid input."""

    @pytest.mark.parametrize("a", [1.0, -1.0, 1.5])
    def test_regime_undefined(self, a: float) -> None:
        result = forward_radius_bound(1.0, 10, a, 1e-3)
        assert isinstance(result, Error)
        assert isinstance(result.error, RegimeUndefinedError)

    def test_overflow_is_range_exceeded(self) -> None:
        match forward_radius_bound(1.0, 10**6, 0.0, 0.4):
            case Error(fault):
                assert isinstance(fault, RangeExceededError)
                assert fault.exit_code == 3
            case _:
                pytest.fail("expected an overflow")

    @pytest.mark.parametrize(
        ("M", "n", "r"), [(0.0, 5, 1e-3), (-1.0, 5, 1e-3), (1.0, 0, 1e-3), (1.0, 5, 0.0)]
    )
    def test_invalid_arguments_raise(self, M: float, n: int, r: float) -> None:
        with pytest.raises(ValueError):
            forward_radius_bound(M, n, 0.0, r)

    def test_record_invariant(self) -> None:
        with pytest.raises(ValueError):
            ForwardBoundRegime(M=1.0, n=0, a=0.0, r=1e-3, bound=1.0, regime=Regime.MidN)


class TestBoundHolds:
    """The computed forward radius stays under the regime bound when eps_k << M r."""

    @pytest.mark.parametrize(
        ("a", "n", "r", "regime"),
        [
            (0.999999, 10, 1e-9, Regime.SmallN),
            (0.3, 50, 1e-9, Regime.MidN),
            (0.0, 40, 0.05, Regime.LargeN),
        ],
    )
    def test_forward_radius_under_bound(self, a: float, n: int, r: float, regime: Regime) -> None:
        coeffs = np.random.default_rng(n).standard_normal(n + 1).tolist()
        ball, trace = ball_clenshaw_forward(ChebyshevSeries(coeffs=coeffs), a, r, DOUBLE)
        m = max(abs(v) for v in trace.u[1:])
        value = forward_radius_bound(m, n, a, r).unwrap()
        assert value.regime is regime
        assert max(trace.eps) < m * r
        slack = (n + 1) * max(trace.eps)
        assert ball.radius <= value.bound + slack
        assert math.isfinite(ball.radius)
