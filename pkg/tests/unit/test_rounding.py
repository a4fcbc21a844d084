"""Unit tests for the rounding-error model."""

import os
import sys

import pytest

sys.path.insert(
    0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "src")
)

from chebball.ball import DOUBLE, RoundingModel, local_rounding_bound, radius_inflation, round_up

U = 2.0**-53


class TestRoundingModel:
    """Tests for RoundingModel construction."""

    def test_double_is_default(self) -> None:
        assert DOUBLE.unit_roundoff == U
        assert RoundingModel() == DOUBLE

    def test_other_precisions_accepted(self) -> None:
        single = RoundingModel(unit_roundoff=2.0**-24)
        assert single.unit_roundoff == 2.0**-24

    def test_rejects_zero(self) -> None:
        with pytest.raises(ValueError, match="unit_roundoff"):
            RoundingModel(unit_roundoff=0.0)

    def test_rejects_coarse_precision(self) -> None:
        with pytest.raises(ValueError):
            RoundingModel(unit_roundoff=1e-3)


class TestLocalRoundingBound:
    """Tests for local_rounding_bound."""

    def test_zero_magnitudes(self) -> None:
        assert local_rounding_bound(DOUBLE, [0.0, 0.0, 0.0]) == 0.0

    def test_empty(self) -> None:
        assert local_rounding_bound(DOUBLE, []) == 0.0

    def test_three_magnitudes(self) -> None:
        bound = local_rounding_bound(DOUBLE, [2.0, 1.0, 1.0])
        assert 4.0 * U <= bound <= 8.0 * U

    def test_single_magnitude(self) -> None:
        assert local_rounding_bound(DOUBLE, [3.0]) <= 2.0 * U * 3.0

    def test_scales_with_unit_roundoff(self) -> None:
        coarse = RoundingModel(unit_roundoff=2.0**-24)
        assert local_rounding_bound(coarse, [1.0]) == 2.0 * 2.0**-24

    def test_accepts_generators(self) -> None:
        assert local_rounding_bound(DOUBLE, (abs(v) for v in (-1.0, 1.0))) == 4.0 * U


class TestRoundUp:
    """Tests for radius inflation."""

    def test_inflation_factor(self) -> None:
        assert radius_inflation(DOUBLE) == 1.0 + 4.0 * U

    def test_round_up_never_shrinks(self) -> None:
        for value in (0.0, 1e-300, 0.1, 1.0, 1e300):
            assert round_up(DOUBLE, value) >= value

    def test_round_up_grows_positive_values(self) -> None:
        assert round_up(DOUBLE, 1.0) > 1.0

    def test_round_up_zero_stays_zero(self) -> None:
        assert round_up(DOUBLE, 0.0) == 0.0
