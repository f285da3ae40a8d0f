# this_file: src/cyclab/growth/monomial.py
"""Growth of monomial norms ||chi_n|| in the algebra attached to each space."""

from dataclasses import dataclass, field
from typing import Any, Literal

import numpy as np
from loguru import logger
from scipy import special

from ..config import WITNESS_SET, WITNESS_SET_VERSION
from ..errors import PreconditionError
from ..polyrat import Poly, RationalMate, cauchy_coefficient_bound
from ..spaces import (
    BesovDirichlet,
    DeBrangesRovnyak,
    HarmonicDirichlet,
    SpaceSpec,
    local_dirichlet,
    multiplier_surrogate_bound,
    norm,
)
from ..utils.fitting import loglog_fit

Quantity = Literal["algebra-norm", "space-norm", "multiplier-surrogate"]
Evaluated = tuple[np.ndarray, np.ndarray, dict[str, Any]]


@dataclass(frozen=True)
class GrowthReport:
    """||chi_n|| for n = 0..n_max against a known upper bound.

    Attributes:
        indices: n = 0..n_max
        values: Monomial norms in the designated norm
        bound_values: Upper bound for each value
        fitted_exponent: Log-log slope of values over n >= 1
        fitted_constant: exp(intercept) of the same fit
        bound_margin: min over n of bound - value
        quantity: Which norm the values are
        norm_tag: Space label plus the witness-set version where one is used
        regime: Parameter regime of the space
        extras: Quantity-specific diagnostics
    """

    indices: tuple[int, ...]
    values: tuple[float, ...]
    bound_values: tuple[float, ...]
    fitted_exponent: float
    fitted_constant: float
    quantity: Quantity
    norm_tag: str
    regime: str = "standing"
    extras: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def bound_margin(self) -> float:
        return float(np.min(np.subtract(self.bound_values, self.values)))

    def to_dict(self) -> dict[str, Any]:
        return {
            "indices": list(self.indices),
            "values": list(self.values),
            "bound_values": list(self.bound_values),
            "fitted_exponent": self.fitted_exponent,
            "fitted_constant": self.fitted_constant,
            "bound_margin": self.bound_margin,
            "quantity": self.quantity,
            "norm_tag": self.norm_tag,
            "regime": self.regime,
            "extras": dict(self.extras),
        }

    def to_rows(self) -> list[tuple[int, float, float]]:
        return list(zip(self.indices, self.values, self.bound_values, strict=True))


def _besov(space: BesovDirichlet, n: np.ndarray) -> Evaluated:
    """(1 + n^p B((n - 1) p / 2 + 1, alpha + 1))^(1/p) against (1 + n^p / (alpha + 1))^(1/p)."""
    p, alpha = space.p, space.alpha
    integral = np.zeros(n.size)
    live = n > 0
    integral[live] = np.exp(
        p * np.log(n[live]) + special.betaln((n[live] - 1) * p / 2.0 + 1.0, alpha + 1.0)
    )
    values = (1.0 + integral) ** (1.0 / p)
    bounds = (1.0 + n**p / (alpha + 1.0)) ** (1.0 / p)
    return values, bounds, {"p": p, "alpha": alpha}


def _de_branges(space: DeBrangesRovnyak, n: np.ndarray) -> Evaluated:
    """sqrt(1 + S_n) with S_n <= C n^(2N + 1), C fitted on the first quarter of the range."""
    mate_ = space.mate
    c = mate_.coefficients(int(n[-1]) + 1)
    partial = np.cumsum(np.abs(c) ** 2)
    power = 2 * mate_.N + 1
    scale = np.maximum(n, 1).astype(float) ** power
    quarter = max(1, int(n[-1]) // 4)
    constant = float(np.max(partial[: quarter + 1] / scale[: quarter + 1]))
    values = np.sqrt(1.0 + partial)
    bounds = np.sqrt(1.0 + constant * scale)
    return values, bounds, {"N": mate_.N, "constant": constant, "fit_range": [0, quarter]}


def _harmonic(space: HarmonicDirichlet, n: np.ndarray) -> Evaluated:
    """max over the witness set of ||chi_n f|| / ||f||, bounded via the local 2n^2 inequality."""
    atoms = space.atoms
    witnesses = [Poly(coeffs) for coeffs in WITNESS_SET]
    values = np.zeros(n.size)
    bounds = np.zeros(n.size)
    pointwise = np.inf
    for f in witnesses:
        base = norm(space, f)
        h2 = f.l2_norm() ** 2
        local_f = [local_dirichlet(f, z) for z, _ in atoms.atoms]
        for i, k in enumerate(n):
            shifted = Poly.monomial(int(k)) * f
            values[i] = max(values[i], norm(space, shifted) / base)
            bound = np.sqrt(multiplier_surrogate_bound(atoms, f, int(k))) / base
            bounds[i] = max(bounds[i], bound)
            for (z, _), d_f in zip(atoms.atoms, local_f, strict=True):
                rhs = 2.0 * k * k * h2 + 2.0 * d_f
                pointwise = min(pointwise, rhs - local_dirichlet(shifted, z))
    extras = {"witness_set": WITNESS_SET_VERSION, "pointwise_margin": float(pointwise)}
    return values, bounds, extras


def monomial_growth(space: SpaceSpec, n_max: int) -> GrowthReport:
    """Monomial norms in the norm designated for the space.

    Besov spaces use the displayed algebra norm, H(b) its space norm and D(mu) the
    witness-set multiplier surrogate.

    Raises:
        PreconditionError: for spaces without a designated growth norm
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    n = np.arange(n_max + 1)
    regime = "standing"
    if isinstance(space, BesovDirichlet):
        values, bounds, extras = _besov(space, n)
        quantity: Quantity = "algebra-norm"
        tag = f"{space.label} displayed algebra norm"
        regime = space.regime
    elif isinstance(space, DeBrangesRovnyak):
        values, bounds, extras = _de_branges(space, n)
        quantity = "space-norm"
        tag = f"{space.label} space norm"
    elif isinstance(space, HarmonicDirichlet):
        values, bounds, extras = _harmonic(space, n)
        quantity = "multiplier-surrogate"
        tag = f"{space.label} multiplier surrogate {WITNESS_SET_VERSION}"
    else:
        raise PreconditionError(f"No designated growth norm for {space.label}")

    fit = loglog_fit(n[1:], values[1:])
    report = GrowthReport(
        indices=tuple(int(k) for k in n),
        values=tuple(float(v) for v in values),
        bound_values=tuple(float(b) for b in bounds),
        fitted_exponent=fit.slope,
        fitted_constant=float(np.exp(fit.intercept)),
        quantity=quantity,
        norm_tag=tag,
        regime=regime,
        extras=extras | {"fit_residual": fit.residual},
    )
    logger.info(
        f"Monomial growth on {space.label}: exponent {fit.slope:.4f}, "
        f"bound margin {report.bound_margin:.3e}"
    )
    return report


@dataclass(frozen=True)
class CoefficientGrowth:
    """Partial sums S_n = sum_{j <= n} |c_j|^2 of the mate quotient b / a."""

    partial_sums: tuple[float, ...]
    slope: float
    cauchy_checked: tuple[int, ...]
    cauchy_ok: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "partial_sums": list(self.partial_sums),
            "slope": self.slope,
            "cauchy_checked": list(self.cauchy_checked),
            "cauchy_ok": self.cauchy_ok,
        }


def coefficient_growth(mate_: RationalMate, n_max: int) -> CoefficientGrowth:
    """S_n up to n_max, the log-log slope of S_n, and |c_j| against the Cauchy estimate."""
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    c = mate_.coefficients(n_max + 1)
    partial = np.cumsum(np.abs(c) ** 2)
    fit = loglog_fit(np.arange(1, n_max + 1), partial[1:])
    checked = [0] + [2**k for k in range(int(np.log2(n_max)) + 1)]
    ok = True
    for j in checked:
        bound, _ = cauchy_coefficient_bound(mate_, j)
        if abs(c[j]) > bound * (1.0 + 1e-9) + 1e-12:
            logger.warning(f"|c_{j}| = {abs(c[j]):.6g} exceeds its Cauchy bound {bound:.6g}")
            ok = False
    return CoefficientGrowth(tuple(float(s) for s in partial), fit.slope, tuple(checked), ok)
