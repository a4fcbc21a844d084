"""Chebball: ball-arithmetic Clenshaw evaluation and certified root isolation."""

import logging

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())
