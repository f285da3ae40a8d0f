# this_file: src/cyclab/outerlab/outer.py
"""Outerness of polynomials, boundary zero sets and radial decay at boundary zeros."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from loguru import logger

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import PreconditionError
from ..polyrat import Poly, circle_clusters, poly_roots
from .modulus import DEFAULT_GRID_SIZE, BoundaryModulus

BoundaryZero = tuple[complex, int]

CROSS_CHECK_GRID = 2**14


def _roots(f: Poly) -> np.ndarray:
    if f.is_zero:
        raise PreconditionError("The zero polynomial has no outer part")
    if f.degree < 1:
        return np.zeros(0, dtype=complex)
    return poly_roots(f)


def is_outer(
    f: Poly,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    cross_check: bool = True,
    grid_size: int = CROSS_CHECK_GRID,
) -> bool:
    """A polynomial is outer iff it has no zeros in the open disc.

    Roots of modulus >= 1 - tolerances.outer_root count as outside. Unless
    ``cross_check`` is off, the verdict is compared against Jensen's formula on
    ``grid_size`` midpoint nodes and a disagreement is logged.
    """
    roots = _roots(f)
    verdict = bool(np.all(np.abs(roots) >= 1.0 - tolerances.outer_root))
    if cross_check:
        diagnostics = outer_diagnostics(f, grid_size=grid_size, tolerances=tolerances)
        if not diagnostics.consistent:
            logger.warning(
                f"Jensen gap {diagnostics.jensen_gap:.3e} disagrees with the root count "
                f"(expected {diagnostics.expected_gap:.3e})"
            )
    return verdict


def boundary_zeros(f: Poly, tolerances: Tolerances = DEFAULT_TOLERANCES) -> list[BoundaryZero]:
    """Unimodular roots with multiplicities, ordered by angle in [0, 2 pi)."""
    roots = _roots(f)
    if roots.size == 0:
        return []
    on_circle, _ = circle_clusters(
        f, roots, tolerances.cluster_radius, tolerances.boundary_zero, tolerances.circle_zero
    )
    return [(c.centroid, c.multiplicity) for c in on_circle]


@dataclass(frozen=True)
class OuterDiagnostics:
    """Root-based outerness next to Jensen's formula.

    Attributes:
        is_outer: No roots in the open disc
        jensen_gap: Circle mean of log|f| minus log|f(0)|
        expected_gap: sum of log(1 / |r|) over the roots inside the disc
        boundary_zeros: Unimodular roots with multiplicities
        grid_size: Number of midpoint nodes for the circle mean
    """

    is_outer: bool
    jensen_gap: float
    expected_gap: float
    boundary_zeros: tuple[BoundaryZero, ...]
    grid_size: int

    @property
    def consistent(self) -> bool:
        """Jensen gap matches the root sum up to the midpoint-rule error."""
        if not np.isfinite(self.jensen_gap):
            return not self.is_outer
        order = sum(m for _, m in self.boundary_zeros) + 1
        slack = 1e-6 + order * np.log(2.0) / self.grid_size
        return abs(self.jensen_gap - self.expected_gap) <= slack

    def to_dict(self) -> dict[str, Any]:
        return {
            "is_outer": self.is_outer,
            "jensen_gap": self.jensen_gap,
            "expected_gap": self.expected_gap,
            "boundary_zeros": [[[z.real, z.imag], m] for z, m in self.boundary_zeros],
            "consistent": self.consistent,
        }


def outer_diagnostics(
    f: Poly, grid_size: int = DEFAULT_GRID_SIZE, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> OuterDiagnostics:
    roots = _roots(f)
    inside = roots[np.abs(roots) < 1.0 - tolerances.outer_root]
    f0 = abs(f.coefficient(0))
    mean_log = BoundaryModulus.from_polynomial(f, grid_size).mean_log()
    gap = mean_log - np.log(f0) if f0 > 0 else float("inf")
    with np.errstate(divide="ignore"):
        expected = float(np.sum(-np.log(np.abs(inside))))
    return OuterDiagnostics(
        is_outer=inside.size == 0,
        jensen_gap=float(gap),
        expected_gap=expected,
        boundary_zeros=tuple(boundary_zeros(f, tolerances)),
        grid_size=grid_size,
    )


@dataclass(frozen=True)
class DecayProfile:
    """(1 - r) log|f(r zeta)| along a radius ending at a boundary zero zeta.

    ``limit_profile`` holds m (1 - r) log(1 - r) for the detected multiplicity m.
    """

    zeta: complex
    radii: tuple[float, ...]
    values: tuple[float, ...]
    multiplicity: int
    limit_profile: tuple[float, ...]

    @property
    def decays(self) -> bool:
        return abs(self.values[-1]) < abs(self.values[0])

    def to_dict(self) -> dict[str, Any]:
        return {
            "zeta": [self.zeta.real, self.zeta.imag],
            "radii": list(self.radii),
            "values": list(self.values),
            "multiplicity": self.multiplicity,
            "limit_profile": list(self.limit_profile),
            "decays": self.decays,
        }

    def to_rows(self) -> list[tuple[float, float, float]]:
        return list(zip(self.radii, self.values, self.limit_profile, strict=True))


def dyadic_radii(levels: int = 20) -> list[float]:
    """r_k = 1 - 2^-k for k = 1..levels."""
    return [1.0 - 2.0**-k for k in range(1, levels + 1)]


def shapiro_shields_decay(
    f: Poly,
    zeta: complex,
    radii_schedule: Sequence[float] | None = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> DecayProfile:
    """Sample (1 - r) log|f(r zeta)| toward a boundary zero.

    Raises:
        PreconditionError: if |zeta| != 1, f is zero, or f(zeta) != 0
    """
    point = complex(zeta)
    if abs(abs(point) - 1.0) > 1e-12:
        raise PreconditionError(f"zeta must be unimodular, got {point}")
    if f.is_zero:
        raise PreconditionError("f must not be identically zero")
    if abs(f(point)) > 1e-10 * max(1.0, f.l2_norm()):
        raise PreconditionError(f"f does not vanish at zeta={point}: |f(zeta)| = {abs(f(point))}")
    radii = np.asarray(radii_schedule if radii_schedule is not None else dyadic_radii(), float)
    if np.any((radii < 0) | (radii >= 1)):
        raise ValueError("Radii must lie in [0, 1)")

    with np.errstate(divide="ignore"):
        values = (1.0 - radii) * np.log(np.abs(f(radii * point)))
        reference = (1.0 - radii) * np.log(1.0 - radii)
    radius = tolerances.cluster_radius
    nearby = [m for z, m in boundary_zeros(f, tolerances) if abs(z - point) <= radius]
    multiplicity = nearby[0] if nearby else 0
    return DecayProfile(
        zeta=point,
        radii=tuple(float(r) for r in radii),
        values=tuple(float(v) for v in values),
        multiplicity=multiplicity,
        limit_profile=tuple(float(multiplicity * v) for v in reference),
    )
