"""Conservative rounding-error model for one fixed binary precision.

Every elementary operation is assumed to be correctly rounded to nearest, so
its error is at most ``unit_roundoff * |computed result|``. Expressions
accumulate these per-operation bounds; radii are pushed upward by a
``1 + 4u`` factor after each radius computation.
"""

from typing import Iterable

from chebball.struct import struct

SAFETY_FACTOR = 2.0
"""Covers the second-order terms dropped by the first-order error sum."""

DOUBLE_UNIT_ROUNDOFF = 2.0**-53


def _check_model(model: "RoundingModel") -> None:
    if not 0.0 < model.unit_roundoff < 1e-6:
        raise ValueError(f"unit_roundoff must lie in (0, 1e-6), got {model.unit_roundoff!r}")


@struct(invariant=_check_model)
class RoundingModel:
    """Working-precision description: half the machine epsilon."""

    unit_roundoff: float = DOUBLE_UNIT_ROUNDOFF


DOUBLE = RoundingModel()


def local_rounding_bound(model: RoundingModel, magnitudes: Iterable[float]) -> float:
    """Bound the rounding error of an expression from its intermediate magnitudes.

    ``magnitudes`` are the absolute values of every rounded intermediate result,
    the final one included.
    """
    return sum(magnitudes) * (SAFETY_FACTOR * model.unit_roundoff)


def radius_inflation(model: RoundingModel) -> float:
    return 1.0 + 4.0 * model.unit_roundoff


def round_up(model: RoundingModel, radius: float) -> float:
    """Inflate a freshly computed radius so it stays an upper bound."""
    return radius * (1.0 + 4.0 * model.unit_roundoff)
