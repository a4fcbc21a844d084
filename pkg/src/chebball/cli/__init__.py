"""Command-line front end, coefficient files, benchmark and blowup demo."""

from chebball.cli.bench import BenchRecord, fit_exponent, run_bench, run_trial, write_csv
from chebball.cli.blowup import BlowupReport, BlowupRow, blowup_demo, fibonacci_floor
from chebball.cli.coefficients import (
    format_coefficients,
    parse_coefficients,
    parse_float_literal,
    read_coefficients,
)
from chebball.cli.generate import gen_random

__all__ = [
    "BenchRecord",
    "fit_exponent",
    "run_bench",
    "run_trial",
    "write_csv",
    "BlowupReport",
    "BlowupRow",
    "blowup_demo",
    "fibonacci_floor",
    "format_coefficients",
    "parse_coefficients",
    "parse_float_literal",
    "read_coefficients",
    "gen_random",
]
