# this_file: src/cyclab/approximants/__init__.py
"""Optimal polynomial approximants, cyclicity scans and bounded point evaluations."""

from .bpe import BpeReport, bpe_estimate
from .descent import DescentParams, opa_descent
from .opa import ApproximantResult, approximant_distances, dist_to_span, opa, shift_matrix
from .scan import (
    CyclicityReport,
    DecayFit,
    cyclicity_scan,
    default_schedule,
    fit_decay,
    plateau_verdict,
)
from .trends import (
    DualityCheck,
    PowerTrend,
    ProductTrend,
    duality_check,
    invertible_reach,
    power_membership_trend,
    product_trend,
)

__all__ = [
    "ApproximantResult",
    "BpeReport",
    "CyclicityReport",
    "DecayFit",
    "DescentParams",
    "DualityCheck",
    "PowerTrend",
    "ProductTrend",
    "approximant_distances",
    "bpe_estimate",
    "cyclicity_scan",
    "default_schedule",
    "dist_to_span",
    "duality_check",
    "fit_decay",
    "invertible_reach",
    "opa",
    "opa_descent",
    "plateau_verdict",
    "power_membership_trend",
    "product_trend",
    "shift_matrix",
]
