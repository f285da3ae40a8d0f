# this_file: src/cyclab/polyrat/factorization.py
"""Fejér–Riesz spectral factorization and pythagorean mates of rational symbols."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np
from loguru import logger

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import (
    FactorizationError,
    InnerFunctionError,
    NegativityError,
    NotInBallError,
    PoleError,
    PreconditionError,
)
from ..utils.grids import circle_points
from .circle import sup_circle
from .poly import ComplexArray, Poly, Rat, TrigPoly
from .roots import circle_clusters, poles_in_closed_disc, poly_roots
from .series import series_div, series_residual, synth_div


@dataclass(frozen=True)
class SpectralFactor:
    """Outcome of a Fejér–Riesz factorization with its boundary-zero bookkeeping."""

    q: Poly
    boundary_zeros: tuple[tuple[complex, int], ...]
    pairing_error: float
    residual: float = 0.0


def _pair_roots(outside: list[complex], inside: list[complex], tol: float) -> float:
    """Match every outside root w to an inside root near 1/conj(w); return the worst mismatch."""
    remaining = list(inside)
    worst = 0.0
    for w in outside:
        mirror = 1.0 / np.conj(w)
        distances = [abs(v - mirror) for v in remaining]
        best = int(np.argmin(distances))
        mismatch = distances[best] / max(1.0, abs(mirror))
        if mismatch > tol:
            raise FactorizationError(
                f"Root {w:.6g} has no reflected partner within tolerance (mismatch {mismatch:.3g})"
            )
        worst = max(worst, mismatch)
        remaining.pop(best)
    return worst


def spectral_factor(
    t: TrigPoly, tolerances: Tolerances = DEFAULT_TOLERANCES, grid_size: int = 4096
) -> SpectralFactor:
    """Fejér–Riesz factorization returning the factor and its circle zeros.

    See :func:`fejer_riesz` for the contract.
    """
    arr = t.array
    scale = float(np.max(np.abs(arr)))
    if scale == 0.0:
        raise PreconditionError("Cannot factor the zero trigonometric polynomial")
    theta = 2.0 * np.pi * np.arange(grid_size) / grid_size
    values = t(theta)
    lowest = float(np.min(values))
    if lowest < -tolerances.negativity * scale:
        raise NegativityError(f"Trig polynomial is negative on the circle (min {lowest:.3g})")

    reduced = t.trimmed(1e-13)
    n = reduced.degree
    mean = float(reduced.coefficient(0).real)
    if mean <= 0:
        raise NegativityError(f"Trig polynomial has nonpositive mean {mean:.3g}")
    if n == 0:
        return SpectralFactor(Poly.constant(np.sqrt(mean)), (), 0.0)

    numerator = reduced.laurent_numerator()
    on_circle, off_circle = circle_clusters(
        numerator,
        poly_roots(numerator),
        tolerances.cluster_radius,
        tolerances.boundary_cluster,
        tolerances.circle_zero,
    )

    chosen: list[complex] = []
    boundary: list[tuple[complex, int]] = []
    for cluster in on_circle:
        if cluster.multiplicity % 2:
            raise FactorizationError(
                f"Circle root {cluster.centroid:.6g} has odd multiplicity {cluster.multiplicity}"
            )
        half = cluster.multiplicity // 2
        chosen.extend([cluster.centroid] * half)
        boundary.append((cluster.centroid, half))

    outside: list[complex] = []
    inside: list[complex] = []
    for cluster in off_circle:
        target = outside if abs(cluster.centroid) > 1.0 else inside
        target.extend([cluster.centroid] * cluster.multiplicity)
    if len(outside) != len(inside):
        raise FactorizationError(
            f"Unbalanced root split: {len(outside)} outside vs {len(inside)} inside the circle"
        )
    pairing_error = _pair_roots(outside, inside, tolerances.pairing)
    chosen.extend(outside)

    monic = Poly.from_roots(chosen)
    q = monic.scaled(np.sqrt(mean) / monic.l2_norm())
    q0 = q.coefficient(0)
    if abs(q0) == 0.0:
        raise FactorizationError("Spectral factor vanishes at the origin")
    q = q.scaled(np.conj(q0) / abs(q0))
    residual = float(np.max(np.abs(np.abs(q(np.exp(1j * theta))) ** 2 - values)))
    if residual > tolerances.factorization * float(np.sum(np.abs(arr))):
        raise FactorizationError(f"|q|^2 misses t by {residual:.3g} on the circle")
    logger.debug(
        f"Fejér–Riesz: degree {n}, {len(boundary)} circle zeros, pairing {pairing_error:.2e}"
    )
    return SpectralFactor(q, tuple(boundary), pairing_error, residual)


def fejer_riesz(
    t: TrigPoly, tolerances: Tolerances = DEFAULT_TOLERANCES, grid_size: int = 4096
) -> Poly:
    """Polynomial q with |q(e^{i theta})|^2 = t(theta), q zero-free in the open disc, q(0) > 0.

    Args:
        t: Nonnegative trigonometric polynomial, not identically zero
        tolerances: Negativity, pairing and clustering tolerances
        grid_size: Circle grid used for the nonnegativity check

    Raises:
        NegativityError: if t dips below -tolerance on the grid
        FactorizationError: if the roots of z^n t(z) cannot be paired as (w, 1/conj(w))
    """
    return spectral_factor(t, tolerances, grid_size).q


@dataclass(frozen=True)
class RationalMate:
    """A rational symbol b with its pythagorean mate a and the series of b/a.

    Attributes:
        b: Symbol in the closed unit ball of H-infinity, holomorphic on the closed disc
        a: Rational outer mate with a(0) > 0 and |a|^2 + |b|^2 = 1 on the circle
        boundary_zeros: Circle zeros of a with multiplicities
        N: Total boundary multiplicity
        c: Taylor coefficients of b/a up to ``truncation_length``
        truncation_length: Number of stored coefficients
        roundtrip_residual: max | |a|^2 + |b|^2 - 1 | on the check grid
        series_residual: Coefficientwise residual of c * a - b
        metadata: Tolerances used for root clustering and checks
    """

    b: Rat
    a: Rat
    boundary_zeros: tuple[tuple[complex, int], ...]
    N: int  # noqa: N815
    c: tuple[complex, ...]
    truncation_length: int
    roundtrip_residual: float
    series_residual: float
    metadata: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.N != sum(m for _, m in self.boundary_zeros):
            raise ValueError(f"N must equal the total boundary multiplicity, got {self.N}")
        if len(self.c) != self.truncation_length:
            raise ValueError(
                f"Expected {self.truncation_length} series coefficients, got {len(self.c)}"
            )

    @property
    def max_multiplicity(self) -> int:
        return max((m for _, m in self.boundary_zeros), default=0)

    @property
    def corona_threshold(self) -> float:
        """Exponent A above which corona solutions in H(b) are available: 2 + max multiplicity."""
        return 2.0 + self.max_multiplicity

    @property
    def quotient(self) -> Rat:
        """b / a as a rational function."""
        return self.b / self.a

    @property
    def outer_part(self) -> Rat:
        """a_1 = a / prod (z - zeta_i)^{m_i}."""
        num = self.a.num
        for zeta, mult in self.boundary_zeros:
            for _ in range(mult):
                num, _rem = synth_div(num, zeta)
        return Rat(num, self.a.den)

    def coefficients(self, length: int) -> ComplexArray:
        """First ``length`` coefficients c_j, extending the stored series when needed."""
        if length <= self.truncation_length:
            return np.array(self.c[:length], dtype=complex)
        return series_div(self.b, self.a, length)

    def to_dict(self) -> dict[str, Any]:
        return {
            "b": self.b.to_json(),
            "a": self.a.to_json(),
            "boundary_zeros": [[[z.real, z.imag], m] for z, m in self.boundary_zeros],
            "N": self.N,
            "truncation_length": self.truncation_length,
            "c_head": [[v.real, v.imag] for v in self.c[:16]],
            "roundtrip_residual": self.roundtrip_residual,
            "series_residual": self.series_residual,
            "corona_threshold": self.corona_threshold,
            "metadata": dict(self.metadata),
        }


def mate(
    b: Rat | Poly,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    n_max: int = 64,
    truncation_length: int | None = None,
    grid_size: int = 4096,
) -> RationalMate:
    """Compute the pythagorean mate of a rational, non-inner symbol.

    Args:
        b: Rational symbol, holomorphic on the closed disc with sup |b| <= 1
        tolerances: Numerical tolerances
        n_max: Largest monomial index needed downstream (sets the default truncation)
        truncation_length: Explicit number of c_j to keep (default 4 * n_max + 16)
        grid_size: Circle grid for the ball, inner and roundtrip checks

    Raises:
        PoleError: if b has a pole on the closed disc
        NotInBallError: if sup |b| on the circle exceeds 1 + tolerance
        InnerFunctionError: if 1 - |b|^2 vanishes on the whole circle
        FactorizationError: if the factorization fails its roundtrip check
    """
    symbol = b if isinstance(b, Rat) else Rat.from_poly(b)
    poles = poles_in_closed_disc(symbol.den, tolerances.ball)
    if poles:
        raise PoleError(f"Symbol has a pole in the closed disc at {poles[0]:.6g}")

    grid = circle_points(grid_size)
    b_values = symbol(grid)
    peak = float(np.max(np.abs(b_values)))
    if peak > 1.0 + tolerances.ball:
        raise NotInBallError(f"sup |b| on the circle is {peak:.12g} > 1")
    defect = 1.0 - np.abs(b_values) ** 2
    if float(np.max(defect)) <= tolerances.inner_floor:
        raise InnerFunctionError("1 - |b|^2 vanishes on the circle: b is inner")

    numerator = TrigPoly.from_poly_modulus(symbol.den) - TrigPoly.from_poly_modulus(symbol.num)
    factor = spectral_factor(numerator, tolerances, grid_size)
    q = factor.q
    a0 = q.coefficient(0) / symbol.den.coefficient(0)
    q = q.scaled(np.conj(a0) / abs(a0))
    outer_mate = Rat(q, symbol.den)

    a_values = outer_mate(grid)
    roundtrip = float(np.max(np.abs(np.abs(a_values) ** 2 + np.abs(b_values) ** 2 - 1.0)))
    if roundtrip > tolerances.factorization:
        raise FactorizationError(f"Mate roundtrip residual {roundtrip:.3g} exceeds tolerance")

    length = truncation_length if truncation_length is not None else 4 * n_max + 16
    c = series_div(symbol, outer_mate, length)
    residual = series_residual(c, symbol, outer_mate)
    scale = max(1.0, float(np.max(np.abs(c)))) if length else 1.0
    if residual > tolerances.series * scale:
        logger.warning(f"Series residual {residual:.3g} above tolerance for b={symbol!r}")

    total = sum(m for _, m in factor.boundary_zeros)
    logger.debug(f"Mate computed: N={total}, roundtrip {roundtrip:.2e}, series {residual:.2e}")
    return RationalMate(
        b=symbol,
        a=outer_mate,
        boundary_zeros=factor.boundary_zeros,
        N=total,
        c=tuple(complex(v) for v in c),
        truncation_length=length,
        roundtrip_residual=roundtrip,
        series_residual=residual,
        metadata={
            "cluster_radius": tolerances.cluster_radius,
            "boundary_cluster_tolerance": tolerances.boundary_cluster,
            "circle_zero_tolerance": tolerances.circle_zero,
            "factor_residual": factor.residual,
            "pairing_error": factor.pairing_error,
            "grid_size": grid_size,
        },
    )


def cauchy_coefficient_bound(
    mate_: RationalMate, j: int, radii: list[float] | None = None, grid_size: int = 1024
) -> tuple[float, float]:
    """Cauchy estimate inf_r M(r) / r^j for |c_j|, with M(r) = sup_{|z|=r} |b/a|.

    Returns:
        (bound, radius attaining it)
    """
    if j < 0:
        raise ValueError(f"Coefficient index must be nonnegative, got {j}")
    candidates = list(radii) if radii is not None else [1.0 - 2.0**-k for k in range(1, 21)]
    if mate_.N > 0 and j > 0:
        candidates.append(j / (j + mate_.N))
    quotient = mate_.quotient
    best, best_r = np.inf, candidates[0]
    for r in candidates:
        if not 0.0 < r < 1.0:
            continue
        value = sup_circle(quotient, grid_size, radius=r) / r**j
        if value < best:
            best, best_r = value, r
    return float(best), float(best_r)


def corona_exponent_threshold(mate_: RationalMate) -> float:
    """2 + max boundary multiplicity: corona solutions in H(b) exist for every larger exponent."""
    return mate_.corona_threshold
