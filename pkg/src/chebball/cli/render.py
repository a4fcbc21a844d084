"""Text, JSON and CSV rendering of CLI results.

Floats are written as shortest round-trip decimals (``repr``) or, with
``hex_floats``, as ``float.hex`` strings for bit-exact archival.
"""

import csv
import io
import json
from typing import Any

from chebball.ball.real import RealBall
from chebball.cli.blowup import BlowupReport
from chebball.operand import cases
from chebball.roots.labels import SolveOutcome
from chebball.struct import trait


@cases
class OutputFormat:
    Json: None
    Text: None
    Csv: None


def number(value: float, hex_floats: bool) -> Any:
    return value.hex() if hex_floats else value


def _text_number(value: float, hex_floats: bool) -> str:
    return value.hex() if hex_floats else repr(value)


def solve_document(outcome: SolveOutcome, hex_floats: bool) -> dict[str, Any]:
    def ball(b: RealBall) -> dict[str, Any]:
        return {"center": number(b.center, hex_floats), "radius": number(b.radius, hex_floats)}

    return {
        "roots": [
            {
                "lo": number(iv.lo, hex_floats),
                "hi": number(iv.hi, hex_floats),
                "sign_left": iv.sign_left.tag,
                "sign_right": iv.sign_right.tag,
            }
            for iv in outcome.roots
        ],
        "suspect": [ball(b) for b in outcome.suspect],
        "stats": {
            "balls_evaluated": outcome.stats.balls_evaluated,
            "max_depth": outcome.stats.max_depth,
            "partition_size": outcome.stats.partition_size,
            "generations": outcome.stats.generations,
        },
    }


@trait
def render_solve(fmt: OutputFormat, outcome: SolveOutcome, hex_floats: bool) -> str:
    """Render an isolation result."""


@render_solve.impl(OutputFormat.Json)
def _solve_json(fmt: OutputFormat, outcome: SolveOutcome, hex_floats: bool) -> str:
    return json.dumps(solve_document(outcome, hex_floats), indent=2) + "\n"


@render_solve.impl(OutputFormat.Text)
def _solve_text(fmt: OutputFormat, outcome: SolveOutcome, hex_floats: bool) -> str:
    lines = [f"{len(outcome.roots)} roots, {len(outcome.suspect)} suspect"]
    for iv in outcome.roots:
        lo, hi = _text_number(iv.lo, hex_floats), _text_number(iv.hi, hex_floats)
        lines.append(f"root [{lo}, {hi}] {iv.sign_left.tag} -> {iv.sign_right.tag}")
    for b in outcome.suspect:
        c, r = _text_number(b.center, hex_floats), _text_number(b.radius, hex_floats)
        lines.append(f"suspect B({c}, {r})")
    return "\n".join(lines) + "\n"


@render_solve.impl(OutputFormat.Csv)
def _solve_csv(fmt: OutputFormat, outcome: SolveOutcome, hex_floats: bool) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("kind", "lo", "hi", "sign_left", "sign_right"))
    for iv in outcome.roots:
        writer.writerow(
            ("root", _text_number(iv.lo, hex_floats), _text_number(iv.hi, hex_floats),
             iv.sign_left.tag, iv.sign_right.tag)
        )
    for b in outcome.suspect:
        lo, hi = b.center - b.radius, b.center + b.radius
        writer.writerow(("suspect", _text_number(lo, hex_floats), _text_number(hi, hex_floats), "", ""))
    return buffer.getvalue()


@trait
def render_mapping(fmt: OutputFormat, document: dict[str, Any]) -> str:
    """Render a flat key/value result such as an evaluation."""


@render_mapping.impl(OutputFormat.Json)
def _mapping_json(fmt: OutputFormat, document: dict[str, Any]) -> str:
    return json.dumps(document, indent=2) + "\n"


@render_mapping.impl(OutputFormat.Text)
def _mapping_text(fmt: OutputFormat, document: dict[str, Any]) -> str:
    return "".join(f"{key}: {value}\n" for key, value in document.items())


@render_mapping.impl(OutputFormat.Csv)
def _mapping_csv(fmt: OutputFormat, document: dict[str, Any]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(document.keys())
    writer.writerow(document.values())
    return buffer.getvalue()


@trait
def render_blowup(fmt: OutputFormat, report: BlowupReport) -> str:
    """Render the width comparison, one row per interior step."""


@render_blowup.impl(OutputFormat.Text)
def _blowup_text(fmt: OutputFormat, report: BlowupReport) -> str:
    lines = [
        f"# T_{report.n} at B(0.5, {report.epsilon!r})",
        f"{'k':>4} {'naive_width':>24} {'fibonacci_floor':>24} {'ball_width':>24}",
    ]
    for row in report.rows:
        naive = "overflow" if row.naive_width is None else f"{row.naive_width:.17g}"
        lines.append(f"{row.k:>4} {naive:>24} {row.fibonacci_floor:>24.17g} {row.ball_width:>24.17g}")
    lines.append(f"# backward radius e_0 = {report.backward_radius!r}")
    lines.append(f"# 3 M n eps           = {report.linear_bound!r}")
    return "\n".join(lines) + "\n"


def blowup_document(report: BlowupReport) -> dict[str, Any]:
    """JSON form of the table; overflowed widths become null."""

    def finite(value: float | None) -> float | None:
        return value if value is not None and value != float("inf") else None

    return {
        "n": report.n,
        "epsilon": report.epsilon,
        "rows": [
            {
                "k": row.k,
                "naive_width": finite(row.naive_width),
                "fibonacci_floor": finite(row.fibonacci_floor),
                "ball_width": row.ball_width,
            }
            for row in report.rows
        ],
        "backward_radius": report.backward_radius,
        "linear_bound": report.linear_bound,
    }


@render_blowup.impl(OutputFormat.Json)
def _blowup_json(fmt: OutputFormat, report: BlowupReport) -> str:
    return json.dumps(blowup_document(report), indent=2) + "\n"


@render_blowup.impl(OutputFormat.Csv)
def _blowup_csv(fmt: OutputFormat, report: BlowupReport) -> str:
    """Rows only; an overflowed naive width is an empty cell."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("k", "naive_width", "fibonacci_floor", "ball_width"))
    for row in report.rows:
        naive = "" if row.naive_width is None else repr(row.naive_width)
        writer.writerow((row.k, naive, repr(row.fibonacci_floor), repr(row.ball_width)))
    return buffer.getvalue()
