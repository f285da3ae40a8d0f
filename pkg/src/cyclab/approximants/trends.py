# this_file: src/cyclab/approximants/trends.py
"""Trend experiments built on approximants: powers, products and the duality bound."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import PreconditionError
from ..polyrat import Poly
from ..spaces import SpaceSpec
from .bpe import bpe_estimate
from .opa import approximant_distances, dist_to_span, opa
from .scan import Verdict, cyclicity_scan


@dataclass(frozen=True)
class PowerTrend:
    """dist(g^N, span{z^k f : k <= n}) for each power N along a degree schedule."""

    powers: tuple[int, ...]
    degrees: tuple[int, ...]
    distances: dict[int, tuple[float, ...]]

    def nonincreasing(self, slack: float = 1e-10) -> bool:
        return all(
            all(b <= a + slack for a, b in zip(seq, seq[1:], strict=False))
            for seq in self.distances.values()
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "powers": list(self.powers),
            "degrees": list(self.degrees),
            "distances": {str(k): list(v) for k, v in self.distances.items()},
        }


def power_membership_trend(
    space: SpaceSpec,
    f: Poly,
    g: Poly,
    powers: Sequence[int] = (1, 2, 3, 4),
    degree_schedule: Sequence[int] = (0, 1, 2, 4, 8, 16, 32),
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> PowerTrend:
    """How well polynomial multiples of f reach the powers g^N.

    Reports the trend only; no particular N is asserted.
    """
    if any(n < 1 for n in powers):
        raise ValueError(f"Powers must be positive, got {list(powers)}")
    degrees = tuple(sorted(set(degree_schedule)))
    table = {
        n: tuple(dist_to_span(space, g**n, f, d, tolerances) for d in degrees) for n in powers
    }
    return PowerTrend(tuple(powers), degrees, table)


@dataclass(frozen=True)
class ProductTrend:
    """Verdicts of the scans for f, phi and f * phi."""

    verdict_f: Verdict
    verdict_phi: Verdict
    verdict_product: Verdict

    @property
    def consistent(self) -> bool:
        """A product of two decaying scans must itself decay."""
        if self.verdict_f == "decaying" and self.verdict_phi == "decaying":
            return self.verdict_product == "decaying"
        return True

    def to_dict(self) -> dict[str, Any]:
        return {
            "f": self.verdict_f,
            "phi": self.verdict_phi,
            "product": self.verdict_product,
            "consistent": self.consistent,
        }


def product_trend(
    space: SpaceSpec,
    f: Poly,
    phi: Poly,
    n_max: int,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> ProductTrend:
    return ProductTrend(
        cyclicity_scan(space, f, n_max, tolerances=tolerances).verdict,
        cyclicity_scan(space, phi, n_max, tolerances=tolerances).verdict,
        cyclicity_scan(space, f * phi, n_max, tolerances=tolerances).verdict,
    )


def invertible_reach(
    space: SpaceSpec,
    f: Poly,
    threshold: float = 1e-6,
    max_degree: int = 64,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> int | None:
    """Smallest degree n with d_n(f) < threshold, or None within ``max_degree``."""
    for n in range(max_degree + 1):
        if opa(space, f, n, tolerances).distance < threshold:
            return n
    return None


@dataclass(frozen=True)
class DualityCheck:
    """d_n(f) * v_{n + deg f}(zeta) for n = 0..n_max; each product is at least 1."""

    zeta: complex
    products: tuple[float, ...]

    @property
    def minimum(self) -> float:
        return min(self.products)

    def holds(self, slack: float = 1e-9) -> bool:
        return self.minimum >= 1.0 - slack

    def to_dict(self) -> dict[str, Any]:
        return {
            "zeta": [self.zeta.real, self.zeta.imag],
            "products": list(self.products),
            "minimum": self.minimum,
        }


def duality_check(
    space: SpaceSpec,
    f: Poly,
    zeta: complex,
    n_max: int,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> DualityCheck:
    """Lower bound d_n(f) >= 1 / v_{n + deg f}(zeta) when f(zeta) = 0.

    |(p f - 1)(zeta)| = 1 for every p, and the evaluation functional at zeta has
    norm v_{n + deg f} on polynomials of that degree.

    Raises:
        PreconditionError: if f does not vanish at zeta
    """
    value = abs(f(complex(zeta)))
    if value > 1e-10 * max(1.0, f.l2_norm()):
        raise PreconditionError(f"Duality bound needs f(zeta) = 0, got |f(zeta)| = {value:.3g}")
    distances = approximant_distances(space, f, n_max, tolerances)
    bpe = bpe_estimate(space, zeta, n_max + f.degree, tolerances)
    values = np.asarray(bpe.values)
    products = distances * values[f.degree : f.degree + n_max + 1]
    return DualityCheck(complex(zeta), tuple(float(p) for p in products))
