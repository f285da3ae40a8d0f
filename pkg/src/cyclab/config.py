# this_file: src/cyclab/config.py
"""Numerical configuration: tolerances, sampling grids and the witness set."""

from dataclasses import asdict, dataclass, fields, replace
from typing import Any, ClassVar, Self

# Multiplier-surrogate witness set for D(mu). Bump the version when the set changes.
WITNESS_SET_VERSION = "F1"
WITNESS_SET: tuple[tuple[complex, ...], ...] = ((1.0,), (1.0, 1.0), (1.0, -1.0))

AREA_MEASURE = "normalized (|D| = 1)"


@dataclass(frozen=True)
class Tolerances:
    """All numeric thresholds used by the library.

    Attributes:
        coefficient: Coefficient-level reconstruction tolerance (synthetic division).
        factorization: Max |a|^2 + |b|^2 - 1 on the circle for an accepted mate.
        series: Coefficientwise residual of c * a - b for truncated series.
        pairing: Relative tolerance for pairing roots (w, 1/conj(w)).
        boundary_cluster: Distance of a root-cluster centroid to the circle.
        cluster_radius: Single-linkage radius used to group perturbed multiple roots.
        circle_zero: Relative size of the low Taylor coefficients at a confirmed circle zero.
        negativity: Allowed negative dip of a nonnegative trig polynomial (relative).
        inner_floor: 1 - |b|^2 must exceed this somewhere on the circle.
        ball: Allowed excess of sup |b| over 1.
        pole: |den(z)| at or below this is treated as a pole.
        singular_condition: Gram condition number above which a system is singular.
        psd_floor: Relative eigenvalue floor for positive semidefiniteness.
        plateau_floor: Minimal final distance for a plateau verdict.
        plateau_tolerance: Relative change over a doubling window for a plateau verdict.
        bpe_cauchy: Relative tail change under which v_n counts as bounded.
        descent_gradient: Gradient-norm target for convex descent.
        bezout_accept: Residual under which a Bezout pair is accepted.
        e0: | |b(zeta)| - 1 | tolerance for E0 membership.
        outer_root: Roots with modulus >= 1 - outer_root count as outside the disc.
        boundary_zero: | |root| - 1 | tolerance for boundary zeros.
        quadrature_convergence: Relative change under node doubling.
        domination: Slack in |g| <= |f|.
        min_decades: Minimal span of deltas in an exponent sweep.
    """

    coefficient: float = 1e-12
    factorization: float = 1e-9
    series: float = 1e-9
    pairing: float = 1e-8
    boundary_cluster: float = 1e-6
    cluster_radius: float = 1e-3
    circle_zero: float = 1e-9
    negativity: float = 1e-10
    inner_floor: float = 1e-10
    ball: float = 1e-9
    pole: float = 1e-14
    singular_condition: float = 1e12
    psd_floor: float = 1e-9
    plateau_floor: float = 1e-3
    plateau_tolerance: float = 1e-2
    bpe_cauchy: float = 1e-3
    descent_gradient: float = 1e-8
    bezout_accept: float = 1e-8
    e0: float = 1e-9
    outer_root: float = 1e-10
    boundary_zero: float = 1e-8
    quadrature_convergence: float = 1e-6
    domination: float = 1e-12
    min_decades: float = 1.5

    _UNSCALED: ClassVar[frozenset[str]] = frozenset(
        {"plateau_floor", "min_decades", "cluster_radius"}
    )

    def __post_init__(self) -> None:
        for item in fields(self):
            value = getattr(self, item.name)
            if value <= 0:
                raise ValueError(f"Tolerance {item.name} must be positive, got {value}")

    def scaled(self, factor: float) -> Self:
        """Return a copy with every error allowance multiplied by ``factor``."""
        if factor <= 0:
            raise ValueError(f"Tolerance scale must be positive, got {factor}")
        changes = {
            item.name: getattr(self, item.name) * factor
            for item in fields(self)
            if item.name not in self._UNSCALED
        }
        return replace(self, **changes)

    def to_dict(self) -> dict[str, float]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        known = {item.name for item in fields(cls)}
        return cls(**{k: float(v) for k, v in data.items() if k in known})


@dataclass(frozen=True)
class GridSpec:
    """Polar sampling grid of the closed disc used for infima.

    Radii are Chebyshev-spaced toward the boundary and include 0 and 1.
    """

    radii: int = 96
    angles: int = 512
    circle: int = 4096
    refine_levels: int = 6
    refine_points: int = 11
    refine_shrink: float = 5.0

    def __post_init__(self) -> None:
        if self.radii < 2:
            raise ValueError(f"Grid needs at least 2 radii, got {self.radii}")
        if self.angles < 4:
            raise ValueError(f"Grid needs at least 4 angles, got {self.angles}")
        if self.circle < 4:
            raise ValueError(f"Circle grid needs at least 4 points, got {self.circle}")
        if self.refine_levels < 0:
            raise ValueError(f"Refinement levels must be nonnegative, got {self.refine_levels}")
        if self.refine_points < 3:
            raise ValueError(f"Refinement needs at least 3 points, got {self.refine_points}")
        if self.refine_shrink <= 1:
            raise ValueError(f"Refinement shrink must exceed 1, got {self.refine_shrink}")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        known = {item.name for item in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})


DEFAULT_TOLERANCES = Tolerances()
DEFAULT_GRID = GridSpec()
