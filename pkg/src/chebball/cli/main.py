"""chebball command line: eval, solve, bench, blowup, gen.

Exit codes: 0 success, 2 unreadable input, 3 range exceeded, 4 suspect
regions left, 5 work cap exceeded, 1 any other failure.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence, TextIO

import numpy as np

from chebball import __version__
from chebball.ball.rounding import DOUBLE
from chebball.cli.bench import fit_exponent, run_bench, write_csv
from chebball.cli.blowup import blowup_demo
from chebball.cli.coefficients import format_coefficients, parse_float_literal, read_coefficients
from chebball.cli.evaluation import Method, evaluate_method
from chebball.cli.generate import gen_random
from chebball.cli.render import OutputFormat, render_blowup, render_mapping, render_solve
from chebball.errors import ChebBallError
from chebball.evaluate.ball_clenshaw import Variant
from chebball.evaluate.series import ChebyshevSeries, derivative_coeffs
from chebball.roots.config import DEFAULT_MAX_INTERVALS, DEFAULT_MIN_RADIUS, SolverConfig
from chebball.roots.labels import IsolatingInterval
from chebball.roots.refine import refine
from chebball.roots.solver import solve
from chebball.struct import evolve
from chebball.types import Error, Ok

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SUSPECT = 4

Handler = Callable[[argparse.Namespace, TextIO], int]


def float_literal(text: str) -> float:
    """Decimal or hexadecimal float, as in coefficient files."""
    try:
        return parse_float_literal(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a float literal: {text!r}") from None


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(
        min_radius=args.min_radius,
        variant=Variant.parse(args.variant),
        max_intervals=args.max_intervals,
    )


def _cmd_eval(args: argparse.Namespace, out: TextIO) -> int:
    p = read_coefficients(args.file).unwrap()
    document = evaluate_method(Method.parse(args.method), p, args.at, args.radius, DOUBLE, args.hex)
    out.write(render_mapping(OutputFormat.parse(args.format), document))
    return EXIT_OK


def _check_supplied_derivative(f: ChebyshevSeries, path: str) -> None:
    supplied = read_coefficients(path).unwrap()
    computed = derivative_coeffs(f)
    length = max(len(supplied.coeffs), len(computed.coeffs))
    a = np.zeros(length)
    b = np.zeros(length)
    a[: len(supplied.coeffs)] = supplied.coeffs
    b[: len(computed.coeffs)] = computed.coeffs
    scale = max(1.0, float(np.max(np.abs(b))))
    if float(np.max(np.abs(a - b))) > 1e-9 * scale:
        logger.warning("%s differs from the derivative of f; using the computed one", path)


def _refine_all(
    f: ChebyshevSeries, roots: Sequence[IsolatingInterval], width: float
) -> list[IsolatingInterval]:
    refined = []
    for iv in roots:
        match refine(f, iv, width):
            case Ok(tight):
                refined.append(tight)
            case Error(fault):
                logger.warning("refinement stopped early: %s", fault)
                refined.append(getattr(fault, "interval", iv))
    return refined


def _cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    f = read_coefficients(args.file).unwrap()
    if args.derivative is not None:
        _check_supplied_derivative(f, args.derivative)
    outcome = solve(f, _solver_config(args)).unwrap()
    if args.refine is not None:
        outcome = evolve(outcome, roots=_refine_all(f, outcome.roots, args.refine))
    out.write(render_solve(OutputFormat.parse(args.format), outcome, args.hex))
    return EXIT_SUSPECT if outcome.suspect else EXIT_OK


def _cmd_bench(args: argparse.Namespace, out: TextIO) -> int:
    records = run_bench(
        sorted(args.degrees), args.trials, args.seed, _solver_config(args), args.workers
    )
    if args.output is not None:
        with Path(args.output).open("w", encoding="utf-8", newline="") as handle:
            write_csv(records, handle)
    else:
        write_csv(records, out)
    slope = fit_exponent(records)
    out.write("# fitted exponent: " + ("n/a" if slope is None else f"{slope:.4f}") + "\n")
    return EXIT_OK


def _cmd_blowup(args: argparse.Namespace, out: TextIO) -> int:
    report = blowup_demo(args.n, args.epsilon)
    out.write(render_blowup(OutputFormat.parse(args.format), report))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    text = format_coefficients(gen_random(args.degree, args.seed))
    if args.output is not None:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def _add_solver_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--min-radius", type=float_literal, default=DEFAULT_MIN_RADIUS)
    parser.add_argument("--variant", choices=Variant.tags(), default=Variant.Backward.tag)
    parser.add_argument("--max-intervals", type=int, default=DEFAULT_MAX_INTERVALS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebball",
        description="Ball-arithmetic Clenshaw evaluation and certified root isolation.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("eval", help="evaluate a series at a point or over a ball")
    p.add_argument("file", help="coefficient file, '-' for stdin")
    p.add_argument("--at", type=float_literal, required=True, help="point or ball center a")
    p.add_argument("--radius", type=float_literal, default=0.0, help="ball radius r")
    p.add_argument("--method", choices=Method.tags(), default=Method.Backward.tag)
    p.add_argument("--format", choices=OutputFormat.tags(), default=OutputFormat.Text.tag)
    p.add_argument("--hex", action="store_true", help="print floats as hex literals")
    p.set_defaults(handler=_cmd_eval)

    p = commands.add_parser("solve", help="isolate the real roots in [-1, 1]")
    p.add_argument("file", help="coefficient file, '-' for stdin")
    p.add_argument("--derivative", help="coefficient file of f' (checked, then recomputed)")
    _add_solver_options(p)
    p.add_argument("--refine", type=float_literal, help="bisect every root down to this width")
    p.add_argument("--format", choices=OutputFormat.tags(), default=OutputFormat.Json.tag)
    p.add_argument("--hex", action="store_true", help="print floats as hex literals")
    p.set_defaults(handler=_cmd_solve)

    p = commands.add_parser("bench", help="time solve on random series, fit the exponent")
    p.add_argument("--degrees", type=int, nargs="+", default=[1000, 2000, 4000, 8000, 16000])
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", help="write the CSV here instead of stdout")
    _add_solver_options(p)
    p.set_defaults(handler=_cmd_bench)

    p = commands.add_parser("blowup", help="naive interval versus ball widths on T_n")
    p.add_argument("--n", type=int, default=30)
    p.add_argument("--epsilon", type=float_literal, default=1e-10)
    p.add_argument("--format", choices=OutputFormat.tags(), default=OutputFormat.Text.tag)
    p.set_defaults(handler=_cmd_blowup)

    p = commands.add_parser("gen", help="write a random N(0, 1) coefficient file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(handler=_cmd_gen)
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    handler: Handler = args.handler
    try:
        return handler(args, sys.stdout if out is None else out)
    except ChebBallError as exc:
        logger.error("%s", exc)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        logger.error("%s", exc)
        return 1
