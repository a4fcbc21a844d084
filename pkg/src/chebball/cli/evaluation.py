"""The ``eval`` subcommand: one series, one point or ball, one method."""

from typing import Any

from chebball.ball.real import RealBall
from chebball.ball.rounding import RoundingModel
from chebball.cli.render import number
from chebball.evaluate.ball_clenshaw import ball_clenshaw_backward, ball_clenshaw_forward
from chebball.evaluate.bounds import forward_radius_bound
from chebball.evaluate.clenshaw import clenshaw_naive_interval, clenshaw_point, reinsch_eval
from chebball.evaluate.series import ChebyshevSeries, degree
from chebball.operand import cases
from chebball.struct import trait
from chebball.types import Ok


@cases
class Method:
    Point: None
    Naive: None
    Reinsch: None
    Forward: None
    Backward: None


def _ball_document(method: "Method", ball: RealBall, hex_floats: bool) -> dict[str, Any]:
    return {
        "method": method.tag,
        "center": number(ball.center, hex_floats),
        "radius": number(ball.radius, hex_floats),
    }


@trait
def evaluate_method(
    method: Method, p: ChebyshevSeries, a: float, r: float, model: RoundingModel, hex_floats: bool
) -> dict[str, Any]:
    """Evaluate p at a (point methods) or over B(a, r) (ball methods)."""


@evaluate_method.impl(Method.Point)
def _point(
    method: Method, p: ChebyshevSeries, a: float, r: float, model: RoundingModel, hex_floats: bool
) -> dict[str, Any]:
    return {"method": method.tag, "value": number(clenshaw_point(p, a), hex_floats)}


@evaluate_method.impl(Method.Reinsch)
def _reinsch(
    method: Method, p: ChebyshevSeries, a: float, r: float, model: RoundingModel, hex_floats: bool
) -> dict[str, Any]:
    ball = reinsch_eval(p, a, model)
    return {
        "method": method.tag,
        "value": number(ball.center, hex_floats),
        "error_bound": number(ball.radius, hex_floats),
    }


@evaluate_method.impl(Method.Naive)
def _naive(
    method: Method, p: ChebyshevSeries, a: float, r: float, model: RoundingModel, hex_floats: bool
) -> dict[str, Any]:
    ball = clenshaw_naive_interval(p, RealBall(center=a, radius=r), model)
    return _ball_document(method, ball, hex_floats)


@evaluate_method.impl(Method.Forward)
def _forward(
    method: Method, p: ChebyshevSeries, a: float, r: float, model: RoundingModel, hex_floats: bool
) -> dict[str, Any]:
    ball, trace = ball_clenshaw_forward(p, a, r, model)
    document = _ball_document(method, ball, hex_floats)
    n = degree(p)
    m = max((abs(v) for v in trace.u[1:]), default=0.0)
    if n >= 1 and r > 0.0 and m > 0.0:
        match forward_radius_bound(m, n, a, r):
            case Ok(predicted):
                document["predicted_bound"] = number(predicted.bound, hex_floats)
                document["regime"] = predicted.regime.tag
            case _:
                pass
    return document


@evaluate_method.impl(Method.Backward)
def _backward(
    method: Method, p: ChebyshevSeries, a: float, r: float, model: RoundingModel, hex_floats: bool
) -> dict[str, Any]:
    ball, _ = ball_clenshaw_backward(p, a, r, model)
    return _ball_document(method, ball, hex_floats)
