"""Tags and records produced by root isolation."""

from chebball.ball.real import RealBall
from chebball.operand import cases
from chebball.struct import struct


@cases
class Sign:
    """Certified sign of a ball."""

    Plus: None
    Minus: None
    Unknown: None


@cases
class Label:
    """What is certified on one partition interval."""

    Plus: None
    Minus: None
    Monotonous: None
    Suspect: None


@cases
class Verdict:
    """Outcome of classifying one ball of the work list."""

    Plus: None
    Minus: None
    Monotonous: None
    Split: None


def label_sign(label: Label) -> Sign:
    if label is Label.Plus:
        return Sign.Plus
    if label is Label.Minus:
        return Sign.Minus
    return Sign.Unknown


@struct
class PartitionEntry:
    """A closed subinterval of [-1, 1] and what is known about f on it.

    plus/minus: f is certified positive/negative on the whole interval.
    monotonous: f' is certified nonzero. suspect: neither, at the floor.
    """

    interval: RealBall
    label: Label


def _check_isolating(iv: "IsolatingInterval") -> None:
    if not -1.0 <= iv.lo < iv.hi <= 1.0:
        raise ValueError(f"need -1 <= lo < hi <= 1, got [{iv.lo!r}, {iv.hi!r}]")
    if Sign.Unknown in (iv.sign_left, iv.sign_right) or iv.sign_left == iv.sign_right:
        raise ValueError("endpoint signs must be opposite and certified")


@struct(invariant=_check_isolating)
class IsolatingInterval:
    """[lo, hi] on which f is strictly monotonic and changes sign: one simple root."""

    lo: float
    hi: float
    sign_left: Sign
    sign_right: Sign


@struct
class SolveStats:
    balls_evaluated: int = 0
    max_depth: int = 0
    partition_size: int = 0
    generations: int = 0


@struct
class SolveOutcome:
    """Isolating intervals plus whatever could not be decided.

    When ``suspect`` is empty, ``roots`` isolates every root of f in [-1, 1].
    ``partition`` is sorted by left endpoint and includes the two boundary
    points.
    """

    roots: tuple[IsolatingInterval, ...]
    suspect: tuple[RealBall, ...]
    stats: SolveStats
    partition: tuple[PartitionEntry, ...] = ()
