"""@trait: dispatch on the first argument's type or on a @cases tag variant."""

import warnings
from typing import Any, Callable


class MissingImplementationWarning(UserWarning):
    """Warning issued when no implementation is found for a dispatch key."""

    pass


def _dispatch_type(key: Any) -> type:
    """Classes register as themselves, tag instances by their variant class."""
    return key if isinstance(key, type) else type(key)


class TraitDispatcher:
    """Single-dispatch polymorphism with explicit registration.

    Implementations are registered either for classes or for @cases unit
    variants; a call dispatches on the first positional argument:

        @ball_clenshaw.impl(Variant.Backward)
        def _(variant, series, a, r, model): ...

        ball_clenshaw(Variant.Backward, series, 0.5, 1e-3, model)
    """

    def __init__(self, default_func: Callable[..., Any]):
        self._default = default_func
        self._name = getattr(default_func, "__name__", "<trait>")
        self.__doc__ = default_func.__doc__
        self._registry: dict[type, Callable[..., Any]] = {}
        self._cache: dict[type, Callable[..., Any]] = {}

    def impl(self, *keys: Any) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
        """Register the decorated function for every given class or variant."""

        def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
            for key in keys:
                self._registry[_dispatch_type(key)] = func
            self._cache.clear()
            return func

        return decorator

    def _find(self, arg_type: type) -> Callable[..., Any] | None:
        if arg_type in self._cache:
            return self._cache[arg_type]
        for mro_type in arg_type.__mro__:
            if mro_type in self._registry:
                self._cache[arg_type] = self._registry[mro_type]
                return self._cache[arg_type]
        return None

    def __call__(self, *args: Any, **kwargs: Any) -> Any:
        if not args:
            raise TypeError(f"{self._name}() requires at least one argument")
        impl = self._find(type(args[0]))
        if impl is None:
            message = f"No implementation of '{self._name}' for {args[0]!r}"
            warnings.warn(message, MissingImplementationWarning, stacklevel=2)
            raise NotImplementedError(message)
        return impl(*args, **kwargs)

    def require(self, key: Any) -> bool:
        """Check whether the class or variant has an implementation."""
        return self._find(_dispatch_type(key)) is not None

    def check(self, key: Any) -> None:
        """Raise TypeError if the class or variant has no implementation."""
        if not self.require(key):
            raise TypeError(f"No implementation of '{self._name}' for {key!r}")

    @property
    def types(self) -> tuple[type, ...]:
        """Return the registered dispatch classes."""
        return tuple(self._registry.keys())


def trait(func: Callable[..., Any]) -> TraitDispatcher:
    """Decorator to create a trait; the decorated body is documentation only."""
    return TraitDispatcher(func)
