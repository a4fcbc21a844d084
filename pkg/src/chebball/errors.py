"""Fault hierarchy shared by the kernels, the solver and the CLI.

Kernels raise these exceptions; public entry points decorated with
``as_result`` hand them back as ``Error(exc)``. Each class carries the process
exit code the CLI reports for it.
"""

from typing import Any


class ChebBallError(Exception):
    """Base class of every expected failure in chebball."""

    exit_code: int = 1


class RangeExceededError(ChebBallError, ArithmeticError):
    """A center or radius left the finite floating-point range."""

    exit_code = 3

    def __init__(self, where: str) -> None:
        super().__init__(f"range exceeded in {where}")
        self.where = where


class RegimeUndefinedError(ChebBallError, ValueError):
    """The forward radius bound has no regime for |a| >= 1."""

    def __init__(self, a: float) -> None:
        super().__init__(f"regime undefined for |a| >= 1 (a={a!r})")
        self.a = a


class InvalidRotationError(ChebBallError, ValueError):
    """A rotation factor is not of modulus one to working precision."""

    def __init__(self, gamma_re: float, gamma_im: float) -> None:
        super().__init__(f"not a unit rotation: ({gamma_re!r}, {gamma_im!r})")
        self.gamma = (gamma_re, gamma_im)


class WorkCapExceededError(ChebBallError, RuntimeError):
    """The subdivision produced more intervals than the configured cap."""

    exit_code = 5

    def __init__(self, cap: int, reached: int) -> None:
        super().__init__(f"work cap exceeded: {reached} intervals > {cap}")
        self.cap = cap
        self.reached = reached


class IndeterminateMidpointError(ChebBallError):
    """Refinement could not decide the sign at any split point.

    ``interval`` is the tightest certified bracket reached before stopping.
    """

    def __init__(self, interval: Any, reason: str) -> None:
        super().__init__(f"indeterminate midpoint: {reason}")
        self.interval = interval
        self.reason = reason


class CoefficientParseError(ChebBallError, ValueError):
    """A coefficient file line is not a finite float literal."""

    exit_code = 2

    def __init__(self, line: int, text: str, source: str = "<input>") -> None:
        super().__init__(f"{source}:{line}: cannot parse coefficient {text!r}")
        self.line = line
        self.text = text
        self.source = source
