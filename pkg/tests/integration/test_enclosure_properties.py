"""Integration tests: enclosure of ball Clenshaw on random inputs.

Both radius schemes are checked against exact rational evaluation over
seeded random series and balls, together with the linear growth of the
backward radius and the gap to plain interval arithmetic.
"""

import os
import sys
from fractions import Fraction

sys.path.insert(
    0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "src")
)

import numpy as np
import pytest

from chebball.ball import DOUBLE, RealBall, rb_width
from chebball.cli import blowup_demo, gen_random
from chebball.evaluate import (
    ChebyshevSeries,
    Variant,
    ball_clenshaw,
    clenshaw_naive_interval,
    series_of,
)


# ── Helpers ─────────────────────────────────────────────────────────────────


def exact_value(coeffs: tuple[float, ...], x: Fraction) -> Fraction:
    u1, u2 = Fraction(0), Fraction(0)
    for a in reversed(coeffs[1:]):
        u1, u2 = 2 * x * u1 - u2 + Fraction(a), u1
    return x * u1 - u2 + Fraction(coeffs[0])


def check_enclosure(p: ChebyshevSeries, variant: Variant, a: float, r: float) -> None:
    ball, _ = ball_clenshaw(variant, p, a, r, DOUBLE)
    center, radius = Fraction(ball.center), Fraction(ball.radius)
    lo, width = Fraction(a) - Fraction(r), 2 * Fraction(r)
    for i in range(9):
        x = lo + width * Fraction(i, 8)
        assert abs(exact_value(p.coeffs, x) - center) <= radius, (variant.tag, a, r, i)


# ── Test Classes ────────────────────────────────────────────────────────────


class TestRandomEnclosure:
    """Exact values over the ball lie inside the computed ball."""

    @pytest.mark.parametrize("variant", [Variant.Forward, Variant.Backward])
    @pytest.mark.parametrize("seed", range(6))
    def test_random_balls(self, variant: Variant, seed: int) -> None:
        rng = np.random.default_rng(100 + seed)
        p = gen_random(int(rng.integers(1, 40)), seed)
        for _ in range(4):
            r = float(10.0 ** rng.uniform(-12, -2))
            a = float(rng.uniform(-1.0 + r, 1.0 - r))
            check_enclosure(p, variant, a, r)

    @pytest.mark.parametrize("a", [-1.0, -0.999999, 0.999999, 1.0])
    def test_near_the_ends(self, a: float) -> None:
        p = gen_random(20, 11)
        for variant in Variant.members():
            check_enclosure(p, variant, a, 1e-7)

    @pytest.mark.parametrize("a", [1.25, -2.0])
    def test_forward_outside(self, a: float) -> None:
        check_enclosure(gen_random(10, 12), Variant.Forward, a, 1e-4)

    @pytest.mark.slow
    @pytest.mark.parametrize("variant", [Variant.Forward, Variant.Backward])
    def test_degree_300(self, variant: Variant) -> None:
        p = gen_random(300, 13)
        for a in (-0.7, 0.05, 0.9):
            check_enclosure(p, variant, a, 1e-9)


class TestBackwardGrowth:
    """The backward radius grows linearly in n."""

    @pytest.mark.parametrize("n", [50, 200, 800])
    def test_radius_under_three_mnr(self, n: int) -> None:
        p = gen_random(n, 21)
        r = 1e-8
        for a in (-0.5, 0.0, 0.93):
            ball, trace = ball_clenshaw(Variant.Backward, p, a, r, DOUBLE)
            m = max(abs(v) for v in trace.u[1:])
            assert ball.radius <= 3.0 * m * n * r + (n + 1) * max(trace.eps)

    def test_naive_interval_explodes(self) -> None:
        n = 60
        p = series_of(*([0.0] * n + [1.0]))
        naive = clenshaw_naive_interval(p, RealBall(center=0.5, radius=1e-10))
        ball, _ = ball_clenshaw(Variant.Backward, p, 0.5, 1e-10, DOUBLE)
        assert rb_width(naive) > 1e6 * rb_width(ball)

    def test_blowup_follows_fibonacci(self) -> None:
        report = blowup_demo(60, 1e-10)
        for row in report.rows[:40]:
            assert row.naive_width is not None
            assert row.naive_width >= row.fibonacci_floor
            assert row.ball_width <= 3.0 * 60 * 1e-10 * 2.0


class TestDeterminism:
    """Identical inputs give bit-identical balls."""

    @pytest.mark.parametrize("variant", [Variant.Forward, Variant.Backward])
    def test_repeatable(self, variant: Variant) -> None:
        p = gen_random(100, 31)
        first = ball_clenshaw(variant, p, 0.3, 1e-5, DOUBLE)
        second = ball_clenshaw(variant, p, 0.3, 1e-5, DOUBLE)
        assert first == second
