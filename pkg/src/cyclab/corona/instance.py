# this_file: src/cyclab/corona/instance.py
"""Corona data (f1, f2) with their computed delta = inf |f1| + |f2| over the disc."""

from dataclasses import dataclass, field
from typing import Any, Self

import numpy as np
from loguru import logger

from ..config import DEFAULT_GRID, DEFAULT_TOLERANCES, GridSpec, Tolerances
from ..errors import CoronaError
from ..polyrat import Poly, Rat, poly_roots, sup_circle
from ..utils.grids import circle_points
from .infimum import GridInfimum, check_no_poles, grid_infimum, lipschitz_bound


def delta_infimum(f1: Poly | Rat, f2: Poly | Rat, grid: GridSpec = DEFAULT_GRID) -> GridInfimum:
    """inf over the closed disc of |f1| + |f2| with its argmin and grid error.

    Raises:
        PoleError: if f1 or f2 has a pole in the closed disc
    """
    check_no_poles(f1)
    check_no_poles(f2)

    def sampler(z: np.ndarray) -> np.ndarray:
        return np.abs(f1(z)) + np.abs(f2(z))

    lipschitz = lipschitz_bound(f1, grid.circle) + lipschitz_bound(f2, grid.circle)
    result = grid_infimum(sampler, lipschitz, grid)
    logger.debug(
        f"delta = {result.value:.6g} at {result.argmin:.6g} (grid error {result.grid_error:.2e})"
    )
    return result


def delta_inf(f1: Poly | Rat, f2: Poly | Rat, grid: GridSpec = DEFAULT_GRID) -> float:
    """Grid infimum of |f1| + |f2| over the closed disc, refined around the minimizer."""
    return delta_infimum(f1, f2, grid).value


def _common_zero(f1: Poly, f2: Poly, tolerances: Tolerances) -> complex | None:
    """A root of one function in the closed disc where the other nearly vanishes."""
    for first, second in ((f1, f2), (f2, f1)):
        if first.is_zero:
            continue
        if first.degree < 1:
            return None
        roots = poly_roots(first)
        scale = max(1.0, second.l2_norm())
        for root in roots[np.abs(roots) <= 1.0 + tolerances.boundary_zero]:
            if abs(second(complex(root))) <= 1e-9 * scale:
                return complex(root)
        return None
    return 0.0j


@dataclass(frozen=True)
class CoronaInstance:
    """A pair of polynomials with 0 < delta <= |f1| + |f2| <= upper on the closed disc.

    Attributes:
        f1, f2: The corona data
        delta: Grid infimum of |f1| + |f2|
        upper: Sampled supremum of |f1| + |f2| (attained on the circle)
        label: Family parameter or free-form tag for reports
        infimum: Grid metadata of the delta computation
    """

    f1: Poly
    f2: Poly
    delta: float
    upper: float
    label: str = ""
    infimum: GridInfimum | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not 0 < self.delta <= self.upper * (1 + 1e-12):
            raise CoronaError(
                f"Need 0 < delta <= upper, got delta={self.delta}, upper={self.upper}"
            )

    @classmethod
    def build(
        cls,
        f1: Poly,
        f2: Poly,
        label: str = "",
        grid: GridSpec = DEFAULT_GRID,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ) -> Self:
        """Compute delta and upper for (f1, f2).

        Raises:
            CoronaError: if f1 and f2 share a zero in the closed disc
        """
        witness = _common_zero(f1, f2, tolerances)
        if witness is not None:
            raise CoronaError(f"f1 and f2 share the zero z={witness:.6g} in the closed disc")
        infimum = delta_infimum(f1, f2, grid)
        if infimum.value <= tolerances.coefficient:
            raise CoronaError(
                f"|f1| + |f2| drops to {infimum.value:.3g} at z={infimum.argmin:.6g}"
            )
        z = circle_points(grid.circle)
        upper = float(np.max(np.abs(f1(z)) + np.abs(f2(z))))
        return cls(f1, f2, infimum.value, max(upper, infimum.value), label, infimum)

    @property
    def grid_error(self) -> float:
        return self.infimum.grid_error if self.infimum else float("nan")

    @property
    def sup_norms(self) -> tuple[float, float]:
        return sup_circle(self.f1), sup_circle(self.f2)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "f1": self.f1.to_json(),
            "f2": self.f2.to_json(),
            "delta": self.delta,
            "upper": self.upper,
            "label": self.label,
        }
        if self.infimum is not None:
            data["infimum"] = self.infimum.to_dict()
        return data
