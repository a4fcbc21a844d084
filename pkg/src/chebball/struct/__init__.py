"""S: Struct module."""

from .struct import evolve, struct
from .trait import MissingImplementationWarning, trait

__all__ = ["struct", "evolve", "trait", "MissingImplementationWarning"]
