"""Certified isolation of the real roots of a Chebyshev series on [-1, 1]."""

from chebball.roots.classify import ball_sign, classify_interval, subdivide, verdict_of
from chebball.roots.config import DEFAULT_MAX_INTERVALS, DEFAULT_MIN_RADIUS, SolverConfig
from chebball.roots.labels import (
    IsolatingInterval,
    Label,
    PartitionEntry,
    Sign,
    SolveOutcome,
    SolveStats,
    Verdict,
)
from chebball.roots.oracle import count_sign_changes, sign_change_locations
from chebball.roots.refine import refine
from chebball.roots.solver import solve

__all__ = [
    "ball_sign",
    "classify_interval",
    "subdivide",
    "verdict_of",
    "DEFAULT_MAX_INTERVALS",
    "DEFAULT_MIN_RADIUS",
    "SolverConfig",
    "IsolatingInterval",
    "Label",
    "PartitionEntry",
    "Sign",
    "SolveOutcome",
    "SolveStats",
    "Verdict",
    "count_sign_changes",
    "sign_change_locations",
    "refine",
    "solve",
]
