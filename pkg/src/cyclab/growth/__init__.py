# this_file: src/cyclab/growth/__init__.py
"""Monomial growth, multiplier lower bounds, resolvent series and power sums."""

from .inequalities import (
    MultiplierCheck,
    PowerSumCheck,
    ResolventCheck,
    SectionSweep,
    eulerian_numbers,
    multiplier_inequality_check,
    multiplier_section_sweep,
    power_sum_closed_form,
    power_sum_inequality,
    resolvent_bound_check,
    section_norm,
)
from .monomial import CoefficientGrowth, GrowthReport, coefficient_growth, monomial_growth

__all__ = [
    "CoefficientGrowth",
    "GrowthReport",
    "MultiplierCheck",
    "PowerSumCheck",
    "ResolventCheck",
    "SectionSweep",
    "coefficient_growth",
    "eulerian_numbers",
    "monomial_growth",
    "multiplier_inequality_check",
    "multiplier_section_sweep",
    "power_sum_closed_form",
    "power_sum_inequality",
    "resolvent_bound_check",
    "section_norm",
]
