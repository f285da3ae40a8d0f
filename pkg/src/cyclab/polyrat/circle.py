# this_file: src/cyclab/polyrat/circle.py
"""Sampling of polynomials and rational functions on circles."""

import numpy as np

from ..utils.grids import circle_points
from .poly import Poly, Rat


def sup_circle(f: Poly | Rat, grid_size: int = 4096, radius: float = 1.0) -> float:
    """Maximum modulus of ``f`` over a uniform grid on the circle |z| = radius.

    Args:
        f: Polynomial or rational function
        grid_size: Number of equally spaced sample points (theta_k = 2 pi k / grid_size)
        radius: Circle radius, 1 for the unit circle

    Raises:
        PoleError: if a sample point hits a pole of a rational ``f``
    """
    if grid_size < 1:
        raise ValueError(f"Grid size must be positive, got {grid_size}")
    if radius < 0:
        raise ValueError(f"Radius must be nonnegative, got {radius}")
    values = f(circle_points(grid_size, radius))
    return float(np.max(np.abs(values)))
