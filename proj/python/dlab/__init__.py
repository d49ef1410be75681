"""Doubling constants of measures on graphs and Euclidean spaces."""

from ._dlab import (
    Error,
    ParseError,
    ball_card,
    ball_polynomial,
    conjecture_scan,
    construct_nu,
    counting_scan,
    discretize_1d,
    doubling_ratio_profile,
    family_constant,
    least_constant_zd,
    mean_value_check,
    perron_local_constant,
    run_cli,
    spectral_radius,
)

__all__ = [
    "Error",
    "ParseError",
    "ball_card",
    "ball_polynomial",
    "conjecture_scan",
    "construct_nu",
    "counting_scan",
    "discretize_1d",
    "doubling_ratio_profile",
    "family_constant",
    "least_constant_zd",
    "mean_value_check",
    "perron_local_constant",
    "run_cli",
    "spectral_radius",
]
