# this_file: src/cyclab/outerlab/__init__.py
"""Outer functions from boundary moduli, boundary zeros and E0 membership."""

from .e0 import BpeConsistency, E0Report, e0_bpe_consistency, e0_membership
from .modulus import (
    DEFAULT_GRID_SIZE,
    BoundaryModulus,
    midpoint_angles,
    outer_from_modulus,
    truncation_length,
)
from .outer import (
    DecayProfile,
    OuterDiagnostics,
    boundary_zeros,
    dyadic_radii,
    is_outer,
    outer_diagnostics,
    shapiro_shields_decay,
)

__all__ = [
    "DEFAULT_GRID_SIZE",
    "BoundaryModulus",
    "BpeConsistency",
    "DecayProfile",
    "E0Report",
    "OuterDiagnostics",
    "boundary_zeros",
    "dyadic_radii",
    "e0_bpe_consistency",
    "e0_membership",
    "is_outer",
    "midpoint_angles",
    "outer_diagnostics",
    "outer_from_modulus",
    "shapiro_shields_decay",
    "truncation_length",
]
