"""Coefficient files: one literal per line, a_0 first.

Decimal and hexadecimal float literals are accepted; blank lines and lines
starting with '#' are skipped. '-' reads standard input.
"""

import math
import re
import sys
from pathlib import Path
from typing import Iterable

from chebball.errors import CoefficientParseError
from chebball.evaluate.series import ChebyshevSeries
from chebball.operand import as_result


_HEX_PREFIX = re.compile(r"[+-]?0[xX]")


def parse_float_literal(text: str) -> float:
    """Decimal literal, or hex literal with a 0x prefix; raises ValueError otherwise."""
    text = text.strip()
    try:
        return float(text)
    except ValueError:
        # fromhex alone would read bare digits such as "abc" as hex
        if not _HEX_PREFIX.match(text):
            raise
        return float.fromhex(text)


def parse_coefficients(lines: Iterable[str], source: str = "<input>") -> ChebyshevSeries:
    coeffs: list[float] = []
    last = 0
    for number, raw in enumerate(lines, start=1):
        last = number
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            value = parse_float_literal(text)
        except ValueError:
            raise CoefficientParseError(number, text, source) from None
        if not math.isfinite(value):
            raise CoefficientParseError(number, text, source)
        coeffs.append(value)
    if not coeffs:
        raise CoefficientParseError(last + 1, "<no coefficients>", source)
    return ChebyshevSeries(coeffs=coeffs)


@as_result
def read_coefficients(path: str) -> ChebyshevSeries:
    """Read a coefficient file; Error(CoefficientParseError) names the bad line."""
    if path == "-":
        return parse_coefficients(sys.stdin, "<stdin>")
    with Path(path).open(encoding="utf-8") as handle:
        return parse_coefficients(handle, path)


def format_coefficients(p: ChebyshevSeries, hex_literals: bool = True) -> str:
    """Render p as a coefficient file; hex literals round-trip bit for bit."""
    body = "\n".join(c.hex() if hex_literals else repr(c) for c in p.coeffs)
    return f"# degree {len(p.coeffs) - 1}\n{body}\n"
