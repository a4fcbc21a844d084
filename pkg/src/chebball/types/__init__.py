"""T: Types module - result containers."""

from .result import Error, Ok, Result

__all__ = ["Ok", "Error", "Result"]
