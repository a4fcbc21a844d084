"""Result[T]: success value or a carried chebball fault."""

from typing import Any, Generic, NoReturn, TypeVar

from chebball.errors import ChebBallError

T = TypeVar("T")

_IMMUTABLE_ERROR = "Result is immutable"


class Ok(Generic[T]):
    """Represents a successful computation."""

    __slots__ = ("_value",)
    __match_args__ = ("value",)
    _value: T

    def __init__(self, value: T) -> None:
        object.__setattr__(self, "_value", value)

    @property
    def value(self) -> T:
        return self._value

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(_IMMUTABLE_ERROR)

    def __delattr__(self, name: str) -> None:
        raise AttributeError(_IMMUTABLE_ERROR)

    def __repr__(self) -> str:
        return f"Ok({self._value!r})"

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Ok):
            return False
        return bool(self._value == other._value)

    def __hash__(self) -> int:
        return hash(("Ok", self._value))

    def unwrap(self) -> T:
        return self._value

    def unwrap_err(self) -> NoReturn:
        raise ValueError(f"Called unwrap_err on Ok: {self._value!r}")


class Error:
    """Represents a failed computation carrying the raised fault."""

    __slots__ = ("_error",)
    __match_args__ = ("error",)
    _error: ChebBallError

    def __init__(self, error: ChebBallError) -> None:
        object.__setattr__(self, "_error", error)

    @property
    def error(self) -> ChebBallError:
        return self._error

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(_IMMUTABLE_ERROR)

    def __delattr__(self, name: str) -> None:
        raise AttributeError(_IMMUTABLE_ERROR)

    def __repr__(self) -> str:
        return f"Error({self._error!r})"

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Error):
            return False
        return type(self._error) is type(other._error) and self._error.args == other._error.args

    def __hash__(self) -> int:
        return hash(("Error", type(self._error), self._error.args))

    def unwrap(self) -> NoReturn:
        """Re-raise the carried fault."""
        raise self._error

    def unwrap_err(self) -> ChebBallError:
        return self._error


Result = Ok[T] | Error
