# this_file: src/cyclab/corona/__init__.py
"""Numerical Bezout problems, delta infima and the delta_lambda bounds."""

from .bezout import BezoutSolution, bezout_ls, minimal_bezout
from .deltas import (
    DeltaLambdaReport,
    LogDominanceReport,
    delta_lambda_dominated,
    delta_lambda_outer,
    log_dominance_check,
)
from .infimum import GridInfimum, check_no_poles, grid_infimum, lipschitz_bound
from .instance import CoronaInstance, delta_inf, delta_infimum
from .sweep import ExponentFit, SweepRow, boundary_family, constant_family, exponent_sweep

__all__ = [
    "BezoutSolution",
    "CoronaInstance",
    "DeltaLambdaReport",
    "ExponentFit",
    "GridInfimum",
    "LogDominanceReport",
    "SweepRow",
    "bezout_ls",
    "boundary_family",
    "check_no_poles",
    "constant_family",
    "delta_inf",
    "delta_infimum",
    "delta_lambda_dominated",
    "delta_lambda_outer",
    "exponent_sweep",
    "grid_infimum",
    "lipschitz_bound",
    "log_dominance_check",
    "minimal_bezout",
]
