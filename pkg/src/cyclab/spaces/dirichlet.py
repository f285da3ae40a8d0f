# this_file: src/cyclab/spaces/dirichlet.py
"""Atomic measures, local Dirichlet integrals and the superharmonic weight U_mu."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any, Self

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from ..errors import PreconditionError
from ..polyrat import Poly, synth_div
from .quadrature import QuadratureSpec, ring_adaptive_integral

BOUNDARY_SLACK = 1e-12


@dataclass(frozen=True)
class MeasureAtoms:
    """Finite positive measure sum_i w_i delta_{z_i} on the closed disc."""

    atoms: tuple[tuple[complex, float], ...]

    def __post_init__(self) -> None:
        cleaned: list[tuple[complex, float]] = []
        for location, weight in self.atoms:
            z, w = complex(location), float(weight)
            if abs(z) > 1.0 + BOUNDARY_SLACK:
                raise ValueError(f"Atom location must lie in the closed disc, got {z}")
            if not w > 0 or not np.isfinite(w):
                raise ValueError(f"Atom weight must be positive and finite, got {w}")
            if abs(abs(z) - 1.0) <= BOUNDARY_SLACK:
                z = z / abs(z)
            cleaned.append((z, w))
        if not cleaned:
            raise ValueError("A measure needs at least one atom")
        object.__setattr__(self, "atoms", tuple(cleaned))

    @classmethod
    def point_mass(cls, location: complex, weight: float = 1.0) -> Self:
        return cls(((location, weight),))

    @property
    def total_mass(self) -> float:
        return float(sum(w for _, w in self.atoms))

    @property
    def boundary(self) -> list[tuple[complex, float]]:
        return [(z, w) for z, w in self.atoms if abs(z) == 1.0]

    @property
    def interior(self) -> list[tuple[complex, float]]:
        return [(z, w) for z, w in self.atoms if abs(z) < 1.0]

    def singular_radii(self) -> list[float]:
        """Radii where U_mu is singular: interior atom moduli, and 1 if mass sits on the circle."""
        radii = [abs(z) for z, _ in self.interior]
        if self.boundary:
            radii.append(1.0)
        return radii

    def to_json(self) -> list[list[Any]]:
        return [[[z.real, z.imag], w] for z, w in self.atoms]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[Any]]) -> Self:
        atoms: list[tuple[complex, float]] = []
        for item in data:
            if len(item) != 2:
                raise ValueError(f"Atom must be [[re, im], weight], got {item}")
            location, weight = item
            if isinstance(location, list | tuple):
                z = complex(float(location[0]), float(location[1]))
            else:
                z = complex(float(location))
            atoms.append((z, float(weight)))
        return cls(tuple(atoms))


def local_dirichlet(g: Poly, z: complex) -> float:
    """D_z(g): squared H^2 norm of the difference quotient (g - g(z)) / (. - z)."""
    if abs(z) > 1.0 + BOUNDARY_SLACK:
        raise PreconditionError(f"Local Dirichlet integral needs |z| <= 1, got {z}")
    quotient, _ = synth_div(g, complex(z))
    return float(np.sum(np.abs(quotient.array) ** 2)) if not quotient.is_zero else 0.0


def quotient_matrix(z: complex, size: int) -> NDArray[np.complex128]:
    """Columns are the difference quotients of chi_0..chi_{size-1} at z.

    Column n holds z^{n-1-k} in row k for k < n, i.e. synth_div(chi_n, z).
    """
    k = np.arange(size)[:, None]
    n = np.arange(size)[None, :]
    exponent = n - 1 - k
    mask = exponent >= 0
    powers = np.where(mask, np.power(complex(z), np.where(mask, exponent, 0)), 0.0)
    return np.asarray(powers, dtype=complex)


def local_dirichlet_gram(atoms: MeasureAtoms, size: int) -> NDArray[np.complex128]:
    """sum_i w_i D_{z_i}(chi_m, chi_n) arranged as entries[m][n]."""
    total = np.zeros((size, size), dtype=complex)
    for z, w in atoms.atoms:
        q = quotient_matrix(z, size)
        total += w * (q.T @ q.conj())
    return total


def u_mu_values(atoms: MeasureAtoms, z: NDArray[np.complex128]) -> NDArray[np.float64]:
    """Vectorized U_mu on points of the open disc."""
    points = np.asarray(z, dtype=complex)
    if np.any(np.abs(points) >= 1.0):
        raise PreconditionError("U_mu is only defined on the open disc")
    total = np.zeros(points.shape, dtype=float)
    for zeta, w in atoms.boundary:
        total += w * (1.0 - np.abs(points) ** 2) / np.abs(zeta - points) ** 2
    for loc, w in atoms.interior:
        distance = np.abs(points - loc)
        if np.any(distance == 0.0):
            raise PreconditionError(f"U_mu is singular at the interior atom {loc}")
        ratio = np.abs(1.0 - np.conj(loc) * points) / distance
        total += w * 2.0 * np.log(ratio) / (1.0 - abs(loc) ** 2)
    return total


def u_mu(atoms: MeasureAtoms, z: complex) -> float:
    """U_mu(z) for a single point of the open disc.

    Raises:
        PreconditionError: if |z| >= 1 or z is an interior atom
    """
    return float(u_mu_values(atoms, np.array([complex(z)]))[0])


@dataclass(frozen=True)
class EnergyIdentity:
    """Quadrature side and exact side of the local Dirichlet energy identity."""

    lhs: float
    rhs: float
    relative_gap: float
    converged: bool
    nodes: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relative_gap": self.relative_gap,
            "converged": self.converged,
            "nodes": self.nodes,
        }


def energy_identity_check(
    atoms: MeasureAtoms,
    g: Poly,
    quadrature: QuadratureSpec | None = None,
    tolerance: float = 1e-6,
) -> EnergyIdentity:
    """Compare int_D |g'|^2 U_mu dA (quadrature) with sum_i w_i D_{z_i}(g) (exact)."""
    spec = quadrature or QuadratureSpec()
    rhs = float(sum(w * local_dirichlet(g, z) for z, w in atoms.atoms))
    dg = g.derivative()
    if dg.is_zero:
        return EnergyIdentity(0.0, rhs, 0.0, True, 0)

    radii = atoms.singular_radii()

    def ring(_r: float, points: NDArray[np.complex128]) -> NDArray[np.float64]:
        return np.abs(dg(points)) ** 2 * u_mu_values(atoms, points)

    coarse, _ = ring_adaptive_integral(ring, spec, radii, g.degree)
    lhs, nodes = ring_adaptive_integral(ring, spec.doubled(), radii, g.degree)
    change = abs(lhs - coarse) / max(abs(lhs), 1e-300)
    converged = change <= tolerance
    if not converged:
        logger.warning(f"Energy-identity quadrature not converged: change {change:.2e}")
    gap = abs(lhs - rhs) / max(abs(rhs), 1e-300)
    logger.debug(f"Energy identity: lhs={lhs:.12g} rhs={rhs:.12g} gap={gap:.2e}")
    return EnergyIdentity(lhs, rhs, gap, converged, nodes)


def multiplier_surrogate_bound(atoms: MeasureAtoms, f: Poly, n: int) -> float:
    """||f||_2^2 + 2 n^2 mu(closed disc) ||f||_2^2 + 2 sum_i w_i D_{z_i}(f).

    Integrating D_z(chi_n f) <= 2 n^2 ||f||_2^2 + 2 D_z(f) against mu bounds
    ||chi_n f||^2 in D(mu) by this quantity.
    """
    if n < 0:
        raise ValueError(f"Monomial index must be nonnegative, got {n}")
    h2 = f.l2_norm() ** 2
    local = sum(w * local_dirichlet(f, z) for z, w in atoms.atoms)
    return float(h2 + 2.0 * n * n * atoms.total_mass * h2 + 2.0 * local)
