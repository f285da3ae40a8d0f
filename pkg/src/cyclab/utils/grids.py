# this_file: src/cyclab/utils/grids.py
"""Sampling grids on the circle and the closed disc."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ..config import GridSpec


def circle_points(count: int, radius: float = 1.0, offset: float = 0.0) -> NDArray[np.complex128]:
    """``count`` equispaced points radius * exp(2 pi i (k + offset) / count)."""
    theta = 2.0 * np.pi * (np.arange(count) + offset) / count
    return np.asarray(radius * np.exp(1j * theta), dtype=complex)


def chebyshev_radii(count: int) -> NDArray[np.float64]:
    """Radii in [0, 1] clustered toward 1: sin(pi k / (2 (count - 1))), k = 0..count-1."""
    k = np.arange(count)
    radii = np.sin(0.5 * np.pi * k / (count - 1))
    radii[-1] = 1.0
    return np.asarray(radii, dtype=float)


@dataclass(frozen=True)
class PolarGrid:
    """Tensor grid of the closed disc with its cell sizes."""

    radii: NDArray[np.float64]
    angles: NDArray[np.float64]

    @classmethod
    def from_spec(cls, spec: GridSpec, include_boundary: bool = True) -> "PolarGrid":
        radii = chebyshev_radii(spec.radii)
        if not include_boundary:
            radii = radii[:-1]
        angles = 2.0 * np.pi * np.arange(spec.angles) / spec.angles
        return cls(radii, angles)

    @property
    def points(self) -> NDArray[np.complex128]:
        """Flattened points, radius-major."""
        return np.asarray(
            (self.radii[:, None] * np.exp(1j * self.angles[None, :])).ravel(), dtype=complex
        )

    @property
    def radial_step(self) -> float:
        return float(np.max(np.diff(self.radii))) if self.radii.size > 1 else 1.0

    @property
    def angular_step(self) -> float:
        return 2.0 * np.pi / self.angles.size

    @property
    def cell_diameter(self) -> float:
        """Upper bound on the distance between neighbouring grid points."""
        return self.radial_step + float(np.max(self.radii)) * self.angular_step

    def to_dict(self) -> dict[str, float | int]:
        return {
            "radii": int(self.radii.size),
            "angles": int(self.angles.size),
            "cell_diameter": self.cell_diameter,
        }
