"""@struct: immutable slotted records with numeric field coercion and invariants."""

import numbers
import types
from typing import Any, Callable, TypeVar, Union, cast, get_args, get_origin, get_type_hints, overload

T = TypeVar("T")
Invariant = Callable[[Any], None]

_IMMUTABLE_ERROR = "Struct is immutable"


def _type_name(expected: Any) -> str:
    return getattr(expected, "__name__", repr(expected))


def _coerce_tuple(key: str, value: Any, args: tuple[Any, ...]) -> tuple[Any, ...]:
    """Coerce a sequence into a tuple, element by element."""
    if isinstance(value, (str, bytes)) or not hasattr(value, "__iter__"):
        raise TypeError(f"Field '{key}' expects a tuple, got {type(value).__name__}")
    items = tuple(value)
    if len(args) == 2 and args[1] is Ellipsis:
        # traces carry thousands of floats; skip the per-item walk when already exact
        if args[0] is float and all(type(item) is float for item in items):
            return items
        return tuple(_coerce(f"{key}[{i}]", item, args[0]) for i, item in enumerate(items))
    if args and len(args) != len(items):
        raise TypeError(f"Field '{key}' expects {len(args)} items, got {len(items)}")
    return tuple(_coerce(f"{key}[{i}]", item, arg) for i, (item, arg) in enumerate(zip(items, args)))


def _coerce(key: str, value: Any, expected: Any) -> Any:
    """Validate value against the annotation, widening numbers where lossless."""
    if expected is Any:
        return value
    origin = get_origin(expected)
    if origin is tuple:
        return _coerce_tuple(key, value, get_args(expected))
    if origin is Union or origin is types.UnionType:
        for option in get_args(expected):
            try:
                return _coerce(key, value, option)
            except TypeError:
                continue
        raise TypeError(f"Field '{key}' expects {expected}, got {type(value).__name__}")
    if expected is type(None):
        if value is None:
            return value
        raise TypeError(f"Field '{key}' expects None, got {type(value).__name__}")
    if expected is float:
        if isinstance(value, numbers.Real) and not isinstance(value, bool):
            return float(value)
    elif expected is int:
        if isinstance(value, numbers.Integral) and not isinstance(value, bool):
            return int(value)
    elif isinstance(expected, type) and isinstance(value, expected):
        return value
    raise TypeError(
        f"Field '{key}' expects {_type_name(expected)}, got {type(value).__name__}"
    )


def _make_init(
    slots: tuple[str, ...],
    defaults: dict[str, Any],
    annotations: dict[str, Any],
    invariant: Invariant | None,
) -> Any:
    """Create the keyword-only __init__."""

    def __init__(self: Any, **kwargs: Any) -> None:
        extra = set(kwargs) - set(slots)
        if extra:
            raise TypeError(f"Unknown fields: {extra}")
        missing = set(slots) - set(kwargs) - set(defaults)
        if missing:
            raise TypeError(f"Missing required fields: {missing}")
        for key in slots:
            value = kwargs[key] if key in kwargs else defaults[key]
            object.__setattr__(self, key, _coerce(key, value, annotations[key]))
        if invariant is not None:
            invariant(self)

    return __init__


def _restore(cls: type, values: tuple[Any, ...]) -> Any:
    """Rebuild a struct instance without re-running validation (pickle support)."""
    instance = object.__new__(cls)
    for key, value in zip(cls.__slots__, values):  # type: ignore[attr-defined]
        object.__setattr__(instance, key, value)
    return instance


def _build(cls: type[T], invariant: Invariant | None) -> type[T]:
    annotations = get_type_hints(cls) if hasattr(cls, "__annotations__") else {}
    slots = tuple(annotations.keys())
    defaults = {k: getattr(cls, k) for k in slots if hasattr(cls, k)}
    cls_name = cls.__name__

    def __setattr__(self: Any, name: str, value: Any) -> None:
        raise AttributeError(_IMMUTABLE_ERROR)

    def __delattr__(self: Any, name: str) -> None:
        raise AttributeError(_IMMUTABLE_ERROR)

    def __repr__(self: Any) -> str:
        fields = ", ".join(f"{k}={getattr(self, k)!r}" for k in slots)
        return f"{cls_name}({fields})"

    def __eq__(self: Any, other: Any) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return all(getattr(self, k) == getattr(other, k) for k in slots)

    def __hash__(self: Any) -> int:
        return hash(tuple(getattr(self, k) for k in slots))

    def __rshift__(self: Any, func: Any) -> Any:
        return func(self)

    def __reduce__(self: Any) -> Any:
        return (_restore, (type(self), tuple(getattr(self, k) for k in slots)))

    def __init_subclass__(sub: type, /, **kwargs: Any) -> None:
        raise TypeError("Cannot inherit from struct")

    return cast(
        type[T],
        type(
            cls_name,
            (),
            {
                "__slots__": slots,
                "__annotations__": annotations,
                "__match_args__": slots,
                "__doc__": cls.__doc__,
                "__init__": _make_init(slots, defaults, annotations, invariant),
                "__setattr__": __setattr__,
                "__delattr__": __delattr__,
                "__repr__": __repr__,
                "__eq__": __eq__,
                "__hash__": __hash__,
                "__rshift__": __rshift__,
                "__reduce__": __reduce__,
                "__init_subclass__": classmethod(__init_subclass__),
                "__module__": cls.__module__,
                "__qualname__": cls.__qualname__,
            },
        ),
    )


@overload
def struct(cls: type[T], /) -> type[T]: ...


@overload
def struct(*, invariant: Invariant) -> Callable[[type[T]], type[T]]: ...


def struct(
    cls: type[T] | None = None, /, *, invariant: Invariant | None = None
) -> type[T] | Callable[[type[T]], type[T]]:
    """Decorator that creates an immutable record with validated fields.

    ``invariant`` runs after every construction and raises to reject the value.
    Methods defined in the class body are not carried over: behaviour lives in
    module functions and traits.
    """
    if cls is not None:
        return _build(cls, invariant)

    def decorator(inner: type[T]) -> type[T]:
        return _build(inner, invariant)

    return decorator


def evolve(instance: T, **changes: Any) -> T:
    """Return a copy of a struct with some fields replaced (validation re-runs)."""
    slots: tuple[str, ...] = type(instance).__slots__  # type: ignore[attr-defined]
    values = {k: getattr(instance, k) for k in slots}
    values.update(changes)
    return type(instance)(**values)
