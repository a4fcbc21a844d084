"""Operand module: tag families, safe wrappers and parallel helpers."""

from chebball.operand.cases import cases
from chebball.operand.concurrent import ordered_map
from chebball.operand.safe import as_result

__all__ = ["cases", "as_result", "ordered_map"]
