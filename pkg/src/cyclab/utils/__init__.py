# this_file: src/cyclab/utils/__init__.py
"""Shared numerical helpers."""

from .fitting import LineFit, line_fit, loglog_fit
from .grids import PolarGrid, chebyshev_radii, circle_points
from .linalg import (
    cholesky_lower,
    generalized_max_eigenvalue,
    hermitian_condition,
    hermitize,
    solve_hermitian,
)

__all__ = [
    "LineFit",
    "PolarGrid",
    "chebyshev_radii",
    "cholesky_lower",
    "circle_points",
    "generalized_max_eigenvalue",
    "hermitian_condition",
    "hermitize",
    "line_fit",
    "loglog_fit",
    "solve_hermitian",
]
