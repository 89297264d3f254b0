"""Exact and numerical evaluation of I(m, n) = int_0^inf sin(x)**n / x**m dx."""
from .closed_form import (
    ClosedFormResult,
    Convergence,
    Divergent,
    DivergenceReason,
    Exact,
    IntegralParams,
    alternating_power_sum,
    binomial,
    classify,
    evaluate,
    harmonic,
    render,
)
from .exact import (
    GaussianRational,
    Rational,
    SymbolicComplex,
    SymbolicReal,
    factor_log,
    i_power,
    log_of_i_times,
    to_float,
)
from .kernel import EULER_GAMMA, eval_regularized, ft_theta_over_x, ft_theta_over_xm
from .quadrature import (
    NumericEstimate,
    QuadratureConfig,
    QuadratureError,
    accelerate_alternating,
    integrate_regularized,
    integrate_sinc_power,
)

__version__ = "0.1.0"
