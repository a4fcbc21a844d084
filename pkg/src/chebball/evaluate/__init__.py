"""Chebyshev series evaluation: point, interval, Reinsch and ball Clenshaw."""

from chebball.evaluate.ball_clenshaw import (
    ConjugateRootPair,
    EvalTrace,
    Variant,
    ball_clenshaw,
    ball_clenshaw_backward,
    ball_clenshaw_forward,
    conjugate_root_pair,
    real_root_bound,
    sine_lower_bound,
)
from chebball.evaluate.batched import batch_ball_clenshaw
from chebball.evaluate.bounds import ForwardBoundRegime, Regime, forward_radius_bound
from chebball.evaluate.clenshaw import (
    ReinschState,
    clenshaw_naive_interval,
    clenshaw_point,
    clenshaw_values,
    elliott_identity_check,
    naive_interval_steps,
    reinsch_eval,
    reinsch_point,
    reinsch_trace,
)
from chebball.evaluate.series import (
    ChebyshevSeries,
    chebyshev_t_values,
    coeff_array,
    degree,
    derivative_coeffs,
    derivative_error_bound,
    series_of,
)

__all__ = [
    "ConjugateRootPair",
    "EvalTrace",
    "Variant",
    "ball_clenshaw",
    "ball_clenshaw_backward",
    "ball_clenshaw_forward",
    "conjugate_root_pair",
    "real_root_bound",
    "sine_lower_bound",
    "batch_ball_clenshaw",
    "ForwardBoundRegime",
    "Regime",
    "forward_radius_bound",
    "ReinschState",
    "clenshaw_naive_interval",
    "clenshaw_point",
    "clenshaw_values",
    "elliott_identity_check",
    "naive_interval_steps",
    "reinsch_eval",
    "reinsch_point",
    "reinsch_trace",
    "ChebyshevSeries",
    "chebyshev_t_values",
    "coeff_array",
    "degree",
    "derivative_coeffs",
    "derivative_error_bound",
    "series_of",
]
