"""Caputo fractional derivatives of elementary and composite functions."""

from ._core import (
    FunctionModel,
    HypSeriesSpec,
    Jet,
    LiftedSeries,
    SeriesResult,
    caputo_quadrature,
    caputo_series,
    caputo_sinh,
    caputo_sinh_shifted,
    caputo_tanh,
    cauchy_repeated_integral,
    chain_rule,
    chain_weight,
    compose,
    derivative_series,
    di_bruno_kth,
    eit_lift,
    eit_transform_check,
    evaluate_power_law,
    from_power_series,
    gamma,
    gen_binomial,
    inverse_derivative,
    linear_combination,
    log_gamma,
    make_constant,
    make_function,
    make_power,
    phyperg,
    product_rule,
    reciprocal,
    sinc_factor,
)

__all__ = [
    "FunctionModel",
    "HypSeriesSpec",
    "Jet",
    "LiftedSeries",
    "SeriesResult",
    "caputo_quadrature",
    "caputo_series",
    "caputo_sinh",
    "caputo_sinh_shifted",
    "caputo_tanh",
    "cauchy_repeated_integral",
    "chain_rule",
    "chain_weight",
    "compose",
    "derivative_series",
    "di_bruno_kth",
    "eit_lift",
    "eit_transform_check",
    "evaluate_power_law",
    "from_power_series",
    "gamma",
    "gen_binomial",
    "inverse_derivative",
    "linear_combination",
    "log_gamma",
    "make_constant",
    "make_function",
    "make_power",
    "phyperg",
    "product_rule",
    "reciprocal",
    "sinc_factor",
]

__version__ = "0.1.0"
