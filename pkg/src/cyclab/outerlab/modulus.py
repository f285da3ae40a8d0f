# this_file: src/cyclab/outerlab/modulus.py
"""Boundary moduli and the outer functions they determine."""

import csv
from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Self

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike, NDArray

from ..errors import PreconditionError
from ..polyrat import Poly

DEFAULT_GRID_SIZE = 2**22
# |z| beyond this loses quadrature accuracy; evaluation still proceeds with a warning.
ACCURACY_RADIUS = 0.999


def midpoint_angles(grid_size: int) -> NDArray[np.float64]:
    """theta_k = 2 pi (k + 1/2) / N; dyadic angles such as 0 are never nodes."""
    return 2.0 * np.pi * (np.arange(grid_size) + 0.5) / grid_size


@dataclass(frozen=True, eq=False)
class BoundaryModulus:
    """Samples of log phi on the midpoint grid of the circle.

    Attributes:
        log_phi: log phi(e^{i theta_k}) at theta_k = 2 pi (k + 1/2) / grid_size
        grid_size: Number of samples, a power of two
    """

    log_phi: NDArray[np.float64]
    grid_size: int
    _coefficients: dict[str, NDArray[np.complex128]] = field(
        default_factory=dict, init=False, repr=False
    )

    def __post_init__(self) -> None:
        n = self.grid_size
        if n < 2 or n & (n - 1):
            raise ValueError(f"Grid size must be a power of two, got {n}")
        if self.log_phi.shape != (n,):
            raise ValueError(f"Expected {n} samples, got shape {self.log_phi.shape}")
        if not np.all(np.isfinite(self.log_phi)):
            raise ValueError("log phi must be finite at every grid node")

    @classmethod
    def from_function(
        cls, phi: Callable[[NDArray[np.float64]], ArrayLike], grid_size: int = DEFAULT_GRID_SIZE
    ) -> Self:
        """Sample phi(theta) > 0 on the midpoint grid."""
        values = np.asarray(phi(midpoint_angles(grid_size)), dtype=float)
        values = np.broadcast_to(values, (grid_size,))
        if np.any(values <= 0):
            raise ValueError("phi must be positive at every grid node")
        return cls(np.log(values), grid_size)

    @classmethod
    def from_polynomial(cls, f: Poly, grid_size: int = DEFAULT_GRID_SIZE) -> Self:
        """phi = |f| on the circle."""
        if f.is_zero:
            raise PreconditionError("The zero polynomial has no boundary modulus")
        values = np.abs(f(np.exp(1j * midpoint_angles(grid_size))))
        if np.any(values == 0):
            raise ValueError("f vanishes at a grid node")
        return cls(np.log(values), grid_size)

    @classmethod
    def from_csv(cls, path: str | Path, grid_size: int = 2**16) -> Self:
        """Rows (theta, phi) resampled onto the grid by periodic linear interpolation.

        Lines starting with '#' and a non-numeric header row are ignored.
        """
        thetas: list[float] = []
        values: list[float] = []
        with Path(path).open(newline="") as handle:
            for row in csv.reader(handle):
                if not row or row[0].lstrip().startswith("#"):
                    continue
                try:
                    theta, phi = float(row[0]), float(row[1])
                except ValueError:
                    continue
                thetas.append(theta % (2 * np.pi))
                values.append(phi)
        if len(thetas) < 2:
            raise ValueError(f"{path} holds fewer than two (theta, phi) samples")
        samples = np.array(values)
        if np.any(samples <= 0):
            raise ValueError(f"{path} contains nonpositive phi values")
        order = np.argsort(thetas)
        logger.debug(f"Read {len(thetas)} boundary samples from {path}")
        resampled = np.interp(
            midpoint_angles(grid_size),
            np.asarray(thetas)[order],
            np.log(samples[order]),
            period=2 * np.pi,
        )
        return cls(resampled, grid_size)

    def fourier_coefficients(self) -> NDArray[np.complex128]:
        """c_k = int log phi(xi) xi^(-k) dm(xi), k = 0..N/2, by the trapezoidal rule."""
        cached = self._coefficients.get("c")
        if cached is None:
            n = self.grid_size
            k = np.arange(n // 2 + 1)
            cached = np.fft.rfft(self.log_phi) / n * np.exp(-1j * np.pi * k / n)
            self._coefficients["c"] = cached
        return cached

    def mean_log(self) -> float:
        return float(np.mean(self.log_phi))

    def to_dict(self) -> dict[str, Any]:
        return {"grid_size": self.grid_size, "mean_log": self.mean_log()}


def truncation_length(z: complex, grid_size: int) -> int:
    """Terms of the Herglotz series kept at z: about 40 / (1 - |z|), at most N/2."""
    gap = max(1.0 - abs(z), 1e-12)
    return int(min(grid_size // 2, np.ceil(40.0 / gap) + 1))


def outer_from_modulus(m: BoundaryModulus, z: complex) -> complex:
    """exp(int (xi + z)/(xi - z) log phi dm) = exp(c_0 + 2 sum_k c_k z^k).

    Raises:
        PreconditionError: if |z| >= 1
    """
    point = complex(z)
    if abs(point) >= 1.0:
        raise PreconditionError(f"Outer functions live inside the disc, got |z| = {abs(point)}")
    if abs(point) > ACCURACY_RADIUS:
        logger.warning(
            f"|z| = {abs(point):.6f} exceeds {ACCURACY_RADIUS}; quadrature accuracy degrades"
        )
    c = m.fourier_coefficients()
    length = truncation_length(point, m.grid_size)
    head = c[1:length]
    powers = np.power(point, np.arange(1, length))
    exponent = c[0] + 2.0 * np.sum(head * powers)
    return complex(np.exp(exponent))
