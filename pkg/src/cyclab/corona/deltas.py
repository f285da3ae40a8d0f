# this_file: src/cyclab/corona/deltas.py
"""Lower bounds for delta_lambda and the log-dominance hypothesis, checked on grids."""

from dataclasses import dataclass
from typing import Any

import numpy as np
from loguru import logger

from ..config import DEFAULT_GRID, DEFAULT_TOLERANCES, GridSpec, Tolerances
from ..errors import DominationError, OuterCheckError, PreconditionError
from ..outerlab import is_outer
from ..polyrat import Poly, sup_circle
from ..spaces import SpaceSpec, algebra_norm_estimate
from ..utils.grids import PolarGrid
from .infimum import GridInfimum, grid_infimum, lipschitz_bound


@dataclass(frozen=True)
class DeltaLambdaReport:
    """delta_lambda against its lower bound.

    Attributes:
        value: Grid infimum of the delta_lambda integrand
        bound: Lower bound the infimum must respect
        holds: value >= bound - grid_error
        m_lambda: Normalizing constant so that the normalized pair has sum at most 1
        c_eps: Outer-function constant (only for the outer variant)
        infimum: Grid metadata of ``value``
    """

    value: float
    bound: float
    holds: bool
    m_lambda: float
    infimum: GridInfimum
    c_eps: float | None = None

    @property
    def grid_error(self) -> float:
        return self.infimum.grid_error

    @property
    def normalized_value(self) -> float:
        return self.value / self.m_lambda

    @property
    def normalized_bound(self) -> float:
        return self.bound / self.m_lambda

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "value": self.value,
            "bound": self.bound,
            "holds": self.holds,
            "m_lambda": self.m_lambda,
            "normalized_value": self.normalized_value,
            "normalized_bound": self.normalized_bound,
            "infimum": self.infimum.to_dict(),
        }
        if self.c_eps is not None:
            data["c_eps"] = self.c_eps
        return data


def delta_lambda_dominated(
    f: Poly,
    g: Poly,
    lam: complex,
    grid: GridSpec = DEFAULT_GRID,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> DeltaLambdaReport:
    """inf |1 - lam g| + |f| over the disc against min(1/2, 1/(2|lam|)) when |g| <= |f|.

    Raises:
        PreconditionError: if lam = 0
        DominationError: if |g| > |f| at a grid point (the worst point is the witness)
    """
    lam = complex(lam)
    if lam == 0:
        raise PreconditionError("lambda must be nonzero")
    points = PolarGrid.from_spec(grid).points
    fv, gv = np.abs(f(points)), np.abs(g(points))
    excess = gv - fv * (1.0 + tolerances.domination) - 1e-15
    k = int(np.argmax(excess))
    if excess[k] > 0:
        raise DominationError(
            f"|g| > |f| at z={points[k]:.6g} (|g| = {gv[k]:.6g}, |f| = {fv[k]:.6g})",
            complex(points[k]),
        )

    def sampler(z: np.ndarray) -> np.ndarray:
        return np.abs(1.0 - lam * g(z)) + np.abs(f(z))

    infimum = grid_infimum(sampler, abs(lam) * lipschitz_bound(g) + lipschitz_bound(f), grid)
    bound = min(0.5, 1.0 / (2.0 * abs(lam)))
    holds = infimum.value >= bound - infimum.grid_error
    m_lambda = 1.0 + abs(lam) * sup_circle(g, grid.circle) + sup_circle(f, grid.circle)
    if not holds:
        logger.warning(f"delta_lambda {infimum.value:.6g} below bound {bound:.6g} at lam={lam}")
    return DeltaLambdaReport(infimum.value, bound, bool(holds), m_lambda, infimum)


def delta_lambda_outer(
    f: Poly,
    lam: complex,
    eps: float,
    grid: GridSpec = DEFAULT_GRID,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> DeltaLambdaReport:
    """inf |lam - z| + |f(z)| against min(c_eps exp(-eps / (1 - |lam|)), |1 - |lam|| / 2).

    c_eps is the grid infimum of |f(z)| exp(eps / (2 (1 - |z|))) over the open disc,
    minimized in log space.

    Raises:
        OuterCheckError: if f has zeros in the open disc
        PreconditionError: if |lam| = 1 or eps <= 0
    """
    lam = complex(lam)
    if abs(abs(lam) - 1.0) <= 1e-12:
        raise PreconditionError(f"|lambda| = 1 is excluded, got {lam}")
    if eps <= 0:
        raise PreconditionError(f"eps must be positive, got {eps}")
    if not is_outer(f, tolerances):
        raise OuterCheckError(f"{f!r} has zeros in the open disc")

    interior = PolarGrid.from_spec(grid, include_boundary=False).points
    with np.errstate(divide="ignore"):
        log_weighted = np.log(np.abs(f(interior))) + eps / (2.0 * (1.0 - np.abs(interior)))
    c_eps = float(np.exp(np.min(log_weighted)))

    def sampler(z: np.ndarray) -> np.ndarray:
        return np.abs(lam - z) + np.abs(f(z))

    infimum = grid_infimum(sampler, 1.0 + lipschitz_bound(f), grid)
    gap = 1.0 - abs(lam)
    bound = min(c_eps * float(np.exp(-eps / gap)), abs(gap) / 2.0)
    holds = infimum.value >= bound - infimum.grid_error
    m_lambda = 1.0 + abs(lam) + sup_circle(f, grid.circle)
    logger.debug(f"delta_lambda_outer at lam={lam}: {infimum.value:.6g} vs {bound:.6g}")
    return DeltaLambdaReport(infimum.value, bound, bool(holds), m_lambda, infimum, c_eps)


@dataclass(frozen=True)
class LogDominanceReport:
    """Outcome of the log-dominance check with the first failing point."""

    holds: bool
    f_norm: float
    checked: int
    skipped: int
    witness: complex | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict[str, Any]:
        return {
            "holds": self.holds,
            "f_norm": self.f_norm,
            "checked": self.checked,
            "skipped": self.skipped,
            "witness": None if self.witness is None else [self.witness.real, self.witness.imag],
            "reason": self.reason,
        }


def log_dominance_check(
    f: Poly,
    g: Poly,
    gamma: float,
    space_for_norm: SpaceSpec,
    grid: GridSpec = DEFAULT_GRID,
    f_norm: float | None = None,
) -> LogDominanceReport:
    """Check Re g >= 0 and |g| <= (log(||f|| / |f|))^(-gamma) on the grid.

    ||f|| is the algebra-norm estimate in ``space_for_norm`` unless ``f_norm`` is given.
    Points with |f| >= ||f|| have a nonpositive logarithm and are skipped.
    """
    if gamma <= 1:
        raise ValueError(f"gamma must exceed 1, got {gamma}")
    if f.is_zero:
        raise PreconditionError("log dominance needs a nonzero f")
    reference = f_norm if f_norm is not None else algebra_norm_estimate(space_for_norm, f).value
    points = PolarGrid.from_spec(grid).points
    fv, gv = np.abs(f(points)), g(points)

    negative = np.flatnonzero(gv.real < -1e-15)
    if negative.size:
        witness = complex(points[negative[0]])
        return LogDominanceReport(False, reference, points.size, 0, witness, "Re g < 0")

    active = fv < reference
    skipped = int(points.size - np.count_nonzero(active))
    with np.errstate(divide="ignore"):
        logs = np.log(reference / fv[active])
    threshold = np.where(np.isinf(logs), 0.0, logs ** (-gamma))
    excess = np.abs(gv[active]) - threshold * (1.0 + 1e-12) - 1e-15
    failing = np.flatnonzero(excess > 0)
    if skipped:
        logger.debug(f"log dominance: {skipped} points with |f| >= ||f|| skipped")
    if failing.size:
        witness = complex(points[active][failing[0]])
        return LogDominanceReport(
            False, reference, int(active.sum()), skipped, witness, "|g| above the log bound"
        )
    return LogDominanceReport(True, reference, int(active.sum()), skipped)
