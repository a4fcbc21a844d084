"""Safe wrapper: convert chebball faults into Result values."""

import functools
from typing import Callable, ParamSpec, TypeVar

from chebball.errors import ChebBallError
from chebball.types.result import Error, Ok

P = ParamSpec("P")
T = TypeVar("T")


def as_result(func: Callable[P, T]) -> Callable[P, Ok[T] | Error]:
    """Wrap function to return Ok(value) or Error(fault).

    Only ChebBallError subclasses are captured; anything else is a bug and
    propagates unchanged.
    """

    @functools.wraps(func)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> Ok[T] | Error:
        try:
            return Ok(func(*args, **kwargs))
        except ChebBallError as e:
            return Error(e)

    return wrapper
