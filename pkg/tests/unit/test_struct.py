"""Unit tests for @struct decorator."""

import os
import pickle
import sys

import pytest

sys.path.insert(
    0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "src")
)

from chebball.ball import RealBall
from chebball.roots import IsolatingInterval, Sign
from chebball.struct import evolve, struct


@struct
class Sample:
    x: float
    count: int = 0


@struct
class Coefficients:
    values: tuple[float, ...]


@struct
class Pair:
    bounds: tuple[float, float]
    label: str | None = None


def _positive(sample: "Positive") -> None:
    if sample.x <= 0.0:
        raise ValueError("x must be positive")


@struct(invariant=_positive)
class Positive:
    x: float


class TestStructCreation:
    """Tests for struct instance creation."""

    def test_creates_instance_with_fields(self) -> None:
        sample = Sample(x=1.5, count=2)
        assert sample.x == 1.5
        assert sample.count == 2

    def test_creates_instance_with_defaults(self) -> None:
        assert Sample(x=1.0).count == 0

    def test_requires_keyword_arguments(self) -> None:
        with pytest.raises(TypeError):
            Sample(1.0)  # type: ignore[misc]

    def test_rejects_missing_fields(self) -> None:
        with pytest.raises(TypeError, match="Missing"):
            Sample()  # type: ignore[call-arg]

    def test_rejects_unknown_fields(self) -> None:
        with pytest.raises(TypeError, match="Unknown"):
            Sample(x=1.0, y=2.0)  # type: ignore[call-arg]


class TestStructCoercion:
    """Tests for numeric widening and tuple coercion."""

    def test_int_widens_to_float(self) -> None:
        sample = Sample(x=3)
        assert isinstance(sample.x, float)
        assert sample.x == 3.0

    def test_bool_is_not_a_number(self) -> None:
        with pytest.raises(TypeError, match="x"):
            Sample(x=True)

    def test_float_is_not_an_int(self) -> None:
        with pytest.raises(TypeError, match="count"):
            Sample(x=1.0, count=1.5)  # type: ignore[arg-type]

    def test_string_is_rejected_for_float(self) -> None:
        with pytest.raises(TypeError):
            Sample(x="1.0")  # type: ignore[arg-type]

    def test_list_becomes_tuple(self) -> None:
        coefficients = Coefficients(values=[1, 2.5, 3])  # type: ignore[arg-type]
        assert coefficients.values == (1.0, 2.5, 3.0)
        assert all(isinstance(v, float) for v in coefficients.values)

    def test_fixed_length_tuple_checks_arity(self) -> None:
        with pytest.raises(TypeError, match="2 items"):
            Pair(bounds=(1.0, 2.0, 3.0))  # type: ignore[arg-type]

    def test_fixed_length_tuple_checks_each_item(self) -> None:
        assert Pair(bounds=(0, 1.5)).bounds == (0.0, 1.5)
        with pytest.raises(TypeError, match=r"bounds\[1\]"):
            Pair(bounds=(0.0, "1.0"))  # type: ignore[arg-type]

    def test_float_tuple_still_rejects_bad_items(self) -> None:
        assert Coefficients(values=(0.5, -1.0)).values == (0.5, -1.0)
        with pytest.raises(TypeError, match=r"values\[1\]"):
            Coefficients(values=(0.5, None))  # type: ignore[arg-type]

    def test_optional_accepts_none(self) -> None:
        assert Pair(bounds=(0.0, 1.0)).label is None
        assert Pair(bounds=(0.0, 1.0), label="root").label == "root"

    def test_optional_rejects_wrong_type(self) -> None:
        with pytest.raises(TypeError):
            Pair(bounds=(0.0, 1.0), label=3)  # type: ignore[arg-type]


class TestStructInvariant:
    """Tests for invariant hooks."""

    def test_invariant_accepts_valid_value(self) -> None:
        assert Positive(x=0.5).x == 0.5

    def test_invariant_rejects_invalid_value(self) -> None:
        with pytest.raises(ValueError, match="positive"):
            Positive(x=-1.0)

    def test_domain_invariant_on_real_ball(self) -> None:
        with pytest.raises(ValueError, match="non-negative"):
            RealBall(center=0.0, radius=-1.0)

    def test_domain_invariant_on_isolating_interval(self) -> None:
        with pytest.raises(ValueError, match="opposite"):
            IsolatingInterval(lo=0.0, hi=0.5, sign_left=Sign.Plus, sign_right=Sign.Plus)


class TestStructImmutability:
    """Tests for immutability."""

    def test_cannot_set_attribute(self) -> None:
        sample = Sample(x=1.0)
        with pytest.raises(AttributeError, match="immutable"):
            sample.x = 2.0  # type: ignore[misc]

    def test_cannot_delete_attribute(self) -> None:
        sample = Sample(x=1.0)
        with pytest.raises(AttributeError, match="immutable"):
            del sample.x

    def test_cannot_subclass(self) -> None:
        with pytest.raises(TypeError, match="inherit"):

            class Child(Sample):  # type: ignore[misc]
                pass


class TestStructProtocols:
    """Tests for equality, hashing, repr, pickling and evolve."""

    def test_equality_and_hash(self) -> None:
        assert Sample(x=1.0, count=1) == Sample(x=1.0, count=1)
        assert Sample(x=1.0) != Sample(x=2.0)
        assert len({Sample(x=1.0), Sample(x=1.0)}) == 1

    def test_repr(self) -> None:
        assert repr(Sample(x=1.0, count=2)) == "Sample(x=1.0, count=2)"

    def test_pickle_round_trip(self) -> None:
        ball = RealBall(center=0.25, radius=0.125)
        assert pickle.loads(pickle.dumps(ball)) == ball

    def test_pattern_matching(self) -> None:
        match RealBall(center=0.5, radius=0.25):
            case RealBall(center, radius):
                assert (center, radius) == (0.5, 0.25)

    def test_evolve_replaces_fields(self) -> None:
        sample = Sample(x=1.0, count=1)
        changed = evolve(sample, count=5)
        assert changed == Sample(x=1.0, count=5)
        assert sample.count == 1

    def test_evolve_reruns_invariant(self) -> None:
        with pytest.raises(ValueError):
            evolve(Positive(x=1.0), x=-1.0)

    def test_rshift_applies_function(self) -> None:
        assert (Sample(x=2.0) >> (lambda s: s.x * 2)) == 4.0
