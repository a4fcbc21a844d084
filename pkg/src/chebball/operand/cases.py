"""@cases: sealed tag families with singleton variants.

    @cases
    class Sign:
        Plus: None
        Minus: None
        Unknown: None

    Sign.Plus.tag == "plus"; Sign.parse("minus") is Sign.Minus
"""

import re
from typing import Any, Iterator, get_type_hints

_CAMEL_BOUNDARY = re.compile(r"(?<=[a-z0-9])(?=[A-Z])")


def _tag_of(name: str) -> str:
    """SmallN -> small_n, Plus -> plus."""
    return _CAMEL_BOUNDARY.sub("_", name).lower()


def _create_unit_variant(name: str, family: type) -> type:
    """Create a singleton variant class deriving from its family."""
    tag = _tag_of(name)
    family_name = family.__name__

    def __new__(cls: type) -> Any:
        if "_instance" not in cls.__dict__:
            instance = object.__new__(cls)
            type.__setattr__(cls, "_instance", instance)
        return cls.__dict__["_instance"]

    def __setattr__(self: Any, attr: str, val: Any) -> None:
        raise AttributeError(f"{name} is immutable")

    def __delattr__(self: Any, attr: str) -> None:
        raise AttributeError(f"{name} is immutable")

    def __repr__(self: Any) -> str:
        return f"{family_name}.{name}"

    def __eq__(self: Any, other: Any) -> bool:
        return type(self) is type(other)

    def __hash__(self: Any) -> int:
        return hash((family_name, name))

    def __rshift__(self: Any, func: Any) -> Any:
        return func(self)

    def __reduce__(self: Any) -> Any:
        return (getattr, (family, name))

    return type(
        name,
        (family,),
        {
            "__slots__": (),
            "__match_args__": (),
            "__new__": __new__,
            "__setattr__": __setattr__,
            "__delattr__": __delattr__,
            "__repr__": __repr__,
            "__eq__": __eq__,
            "__hash__": __hash__,
            "__rshift__": __rshift__,
            "__reduce__": __reduce__,
            "__qualname__": f"{family.__qualname__}.{name}",
            "__module__": family.__module__,
            "tag": tag,
        },
    )


def _parse(cls: type, text: str) -> Any:
    """Look up a variant by tag (case-insensitive, '-' accepted for '_')."""
    key = text.strip().lower().replace("-", "_")
    variants: dict[str, Any] = cls._variants  # type: ignore[attr-defined]
    if key not in variants:
        choices = ", ".join(variants)
        raise ValueError(f"unknown {cls.__name__} {text!r}; expected one of: {choices}")
    return variants[key]


def _members(cls: type) -> Iterator[Any]:
    variants: dict[str, Any] = cls._variants  # type: ignore[attr-defined]
    return iter(variants.values())


def _tags(cls: type) -> tuple[str, ...]:
    variants: dict[str, Any] = cls._variants  # type: ignore[attr-defined]
    return tuple(variants)


def cases(cls: type) -> type:
    """Decorator turning ``Name: None`` annotations into singleton variants."""
    annotations = get_type_hints(cls) if hasattr(cls, "__annotations__") else {}
    variants: dict[str, Any] = {}

    for name, variant_type in annotations.items():
        if variant_type is not type(None):
            raise TypeError(f"{cls.__name__}.{name}: only unit variants (None) are supported")
        instance = _create_unit_variant(name, cls)()
        setattr(cls, name, instance)
        variants[instance.tag] = instance

    cls._variants = variants  # type: ignore[attr-defined]
    cls.parse = classmethod(_parse)  # type: ignore[attr-defined]
    cls.members = classmethod(_members)  # type: ignore[attr-defined]
    cls.tags = classmethod(_tags)  # type: ignore[attr-defined]
    return cls
