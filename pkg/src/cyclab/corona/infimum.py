# this_file: src/cyclab/corona/infimum.py
"""Grid infima over the closed disc with zoom refinement and a Lipschitz error bound."""

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import NDArray

from ..config import DEFAULT_GRID, GridSpec
from ..errors import PoleError
from ..polyrat import Poly, Rat, poles_in_closed_disc, sup_circle
from ..utils.grids import PolarGrid

Sampler = Callable[[NDArray[np.complex128]], NDArray[np.float64]]


@dataclass(frozen=True)
class GridInfimum:
    """Minimum of a sampled function with where it was found and how far it can be off.

    Attributes:
        value: Smallest sampled value (after refinement)
        argmin: Point attaining ``value``
        grid_error: Lipschitz constant times half the coarse cell diameter
        grid: Grid shape and refinement depth
    """

    value: float
    argmin: complex
    grid_error: float
    grid: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "argmin": [self.argmin.real, self.argmin.imag],
            "grid_error": self.grid_error,
            "grid": dict(self.grid),
        }


def check_no_poles(f: Poly | Rat, margin: float = 1e-12) -> None:
    """Raise PoleError if a rational f has a pole in the closed disc."""
    if isinstance(f, Poly):
        return
    poles = poles_in_closed_disc(f.den, margin)
    if poles:
        raise PoleError(f"Pole at z={poles[0]:.6g} in the closed disc")


def lipschitz_bound(f: Poly | Rat, grid_size: int = 4096) -> float:
    """Bound on sup |f'| over the closed disc.

    Polynomials use sum k |a_k|. Rationals without poles in the closed disc use the
    sampled circle maximum of |f'| (maximum principle) with a 10% margin.
    """
    if isinstance(f, Poly):
        k = np.arange(len(f.coeffs))
        return float(np.sum(k * np.abs(f.array)))
    if f.den.degree < 1:
        return lipschitz_bound(f.num) / abs(f.den.coefficient(0))
    return 1.1 * sup_circle(f.derivative(), grid_size)


def _zoom(
    sampler: Sampler, center: complex, spec: GridSpec, grid: PolarGrid, r_max: float
) -> tuple[float, complex]:
    radius, angle = abs(center), float(np.angle(center))
    half_r, half_t = grid.radial_step, grid.angular_step
    best_point = center
    best_value = float(sampler(np.array([center]))[0])
    for _ in range(spec.refine_levels):
        rs = np.clip(np.linspace(radius - half_r, radius + half_r, spec.refine_points), 0, r_max)
        ts = np.linspace(angle - half_t, angle + half_t, spec.refine_points)
        points = (rs[:, None] * np.exp(1j * ts[None, :])).ravel()
        values = sampler(points)
        k = int(np.argmin(values))
        if values[k] < best_value:
            best_value, best_point = float(values[k]), complex(points[k])
        radius, angle = abs(best_point), float(np.angle(best_point))
        half_r /= spec.refine_shrink
        half_t /= spec.refine_shrink
    return best_value, best_point


def grid_infimum(
    sampler: Sampler,
    lipschitz: float,
    spec: GridSpec = DEFAULT_GRID,
    include_boundary: bool = True,
    refine: bool = True,
) -> GridInfimum:
    """Minimize ``sampler`` over the polar grid of the disc, then zoom around the minimizer.

    Each zoom level samples a refine_points x refine_points patch in (r, theta)
    and shrinks the patch by refine_shrink. Refinement never leaves the grid's
    radial range.
    """
    grid = PolarGrid.from_spec(spec, include_boundary=include_boundary)
    points = grid.points
    values = sampler(points)
    k = int(np.argmin(values))
    value, argmin = float(values[k]), complex(points[k])
    levels = spec.refine_levels if refine else 0
    if levels:
        value, argmin = _zoom(sampler, argmin, spec, grid, float(np.max(grid.radii)))
    metadata = grid.to_dict() | {"refine_levels": levels, "include_boundary": include_boundary}
    return GridInfimum(value, argmin, 0.5 * lipschitz * grid.cell_diameter, metadata)
