# this_file: src/cyclab/spaces/quadrature.py
"""Product quadrature on the unit disc under the normalized area measure.

The disc has total mass 1: dA = r dr dtheta / pi. Radial nodes come from
Gauss–Legendre on [0, 1] (or Gauss–Jacobi in t = r^2 for singular weights),
angular nodes are uniform.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace
from math import ceil
from typing import Any, ClassVar, Literal, Self

import numpy as np
from loguru import logger
from numpy.polynomial.legendre import leggauss
from numpy.typing import NDArray
from scipy import special

Scheme = Literal["gauss-legendre", "gauss-jacobi"]

MAX_RING_NODES = 2**20


@dataclass(frozen=True)
class QuadratureSpec:
    """Node counts and radial scheme of the disc quadrature."""

    radial_nodes: int = 128
    angular_nodes: int = 256
    scheme: Scheme = "gauss-legendre"

    SCHEMES: ClassVar[tuple[str, ...]] = ("gauss-legendre", "gauss-jacobi")

    def __post_init__(self) -> None:
        if self.radial_nodes < 1:
            raise ValueError(f"Radial nodes must be positive, got {self.radial_nodes}")
        if self.angular_nodes < 1:
            raise ValueError(f"Angular nodes must be positive, got {self.angular_nodes}")
        if self.scheme not in self.SCHEMES:
            raise ValueError(f"Unknown quadrature scheme: {self.scheme}")

    def doubled(self) -> Self:
        return replace(
            self, radial_nodes=2 * self.radial_nodes, angular_nodes=2 * self.angular_nodes
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "radial_nodes": self.radial_nodes,
            "angular_nodes": self.angular_nodes,
            "scheme": self.scheme,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        return cls(
            radial_nodes=int(data.get("radial_nodes", 128)),
            angular_nodes=int(data.get("angular_nodes", 256)),
            scheme=data.get("scheme", "gauss-legendre"),
        )


@dataclass(frozen=True, eq=False)
class DiscRule:
    """Flattened quadrature points and weights."""

    points: NDArray[np.complex128]
    weights: NDArray[np.float64]

    def integrate(self, values: NDArray[Any]) -> float:
        return float(np.sum(self.weights * np.real(values)))


def radial_rule(
    spec: QuadratureSpec, alpha: float = 0.0
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Radii and weights w with sum w g(r) ~ 2 int_0^1 g(r) (1 - r^2)^alpha r dr."""
    n = spec.radial_nodes
    if spec.scheme == "gauss-jacobi":
        x, w = special.roots_jacobi(n, alpha, 0.0)
        radii = np.sqrt(0.5 * (x + 1.0))
        return radii, np.asarray(w * 2.0 ** (-alpha - 1.0), dtype=float)
    x, w = leggauss(n)
    radii = 0.5 * (x + 1.0)
    weights = 0.5 * w * 2.0 * radii * (1.0 - radii**2) ** alpha
    return radii, np.asarray(weights, dtype=float)


def disc_rule(spec: QuadratureSpec, alpha: float = 0.0) -> DiscRule:
    """Tensor rule for int_D g(z) (1 - |z|^2)^alpha dA(z)."""
    radii, radial_weights = radial_rule(spec, alpha)
    m = spec.angular_nodes
    theta = 2.0 * np.pi * np.arange(m) / m
    points = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
    weights = np.repeat(radial_weights / m, m)
    return DiscRule(np.asarray(points, dtype=complex), weights)


def integrate_disc(
    integrand: Callable[[NDArray[np.complex128]], NDArray[Any]],
    spec: QuadratureSpec,
    alpha: float = 0.0,
    tolerance: float | None = None,
) -> tuple[float, bool]:
    """Integrate over the disc, optionally checking the result under node doubling.

    Returns:
        (value, converged); ``converged`` is True when no check was requested
    """
    rule = disc_rule(spec, alpha)
    value = rule.integrate(integrand(rule.points))
    if tolerance is None:
        return value, True
    finer = disc_rule(spec.doubled(), alpha)
    refined = finer.integrate(integrand(finer.points))
    change = abs(refined - value) / max(abs(refined), 1e-300)
    if change > tolerance:
        logger.warning(
            f"Quadrature not converged: doubling nodes changed the integral by {change:.2e}"
        )
        return refined, False
    logger.debug(f"Quadrature converged: relative change {change:.2e}")
    return refined, True


def _breakpoints(singular_radii: Sequence[float]) -> list[float]:
    inner = sorted({float(s) for s in singular_radii if 0.0 < s < 1.0})
    return [0.0, *inner, 1.0]


def ring_node_count(
    r: float, singular_radii: Sequence[float], base: int, bandwidth: int
) -> int:
    """Angular nodes for the ring |z| = r near log or Poisson singularities.

    A singularity at radius s leaves the angular integrand analytic in a strip of
    half-width |log(r / s)|; the trapezoidal error then decays like exp(-M * width).
    """
    widths = [abs(np.log(r / s)) for s in singular_radii if s > 0.0]
    count = max(base, 2 * bandwidth + 1)
    if widths:
        gap = max(min(widths), 1e-300)
        count = max(count, ceil(20.0 / gap) + 2 * bandwidth + 1)
    return int(min(count, MAX_RING_NODES))


def ring_adaptive_integral(
    ring_integrand: Callable[[float, NDArray[np.complex128]], NDArray[Any]],
    spec: QuadratureSpec,
    singular_radii: Sequence[float],
    bandwidth: int,
) -> tuple[float, int]:
    """Composite Gauss–Legendre in r split at ``singular_radii``, adaptive in theta.

    Args:
        ring_integrand: Called with (r, points on the ring), returns integrand values
        spec: Base node counts
        singular_radii: Radii where the integrand is singular (1 for Poisson-type terms)
        bandwidth: Angular frequency content of the smooth factor

    Returns:
        (integral under the normalized area measure, total number of nodes)
    """
    breaks = _breakpoints(singular_radii)
    total = 0.0
    nodes = 0
    for lo, hi in zip(breaks[:-1], breaks[1:], strict=True):
        n_sub = max(16, ceil(spec.radial_nodes * (hi - lo)))
        x, w = leggauss(n_sub)
        radii = lo + 0.5 * (hi - lo) * (x + 1.0)
        radial_weights = 0.5 * (hi - lo) * w * 2.0 * radii
        for r, weight in zip(radii, radial_weights, strict=True):
            m = ring_node_count(float(r), singular_radii, spec.angular_nodes, bandwidth)
            ring = r * np.exp(2j * np.pi * np.arange(m) / m)
            total += weight * float(np.mean(np.real(ring_integrand(float(r), ring))))
            nodes += m
    logger.debug(f"Ring-adaptive quadrature: {len(breaks) - 1} panels, {nodes} nodes")
    return total, nodes
