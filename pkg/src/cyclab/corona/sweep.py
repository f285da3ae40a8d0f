# this_file: src/cyclab/corona/sweep.py
"""Exponent sweeps: how the Bezout norms grow as delta shrinks."""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from loguru import logger

from ..config import DEFAULT_GRID, DEFAULT_TOLERANCES, GridSpec, Tolerances
from ..errors import FamilyDegenerateError
from ..polyrat import Poly
from ..spaces import SpaceSpec
from ..utils.fitting import line_fit
from .bezout import BezoutSolution, minimal_bezout
from .instance import CoronaInstance

MIN_CONVERGED = 4


@dataclass(frozen=True)
class SweepRow:
    """One converged instance of a sweep."""

    label: str
    delta: float
    degree: int
    residual: float
    g1_norm: float
    g2_norm: float
    g_sup_norm: float

    @property
    def max_norm(self) -> float:
        return max(self.g1_norm, self.g2_norm)

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "delta": self.delta,
            "degree": self.degree,
            "residual": self.residual,
            "g1_norm": self.g1_norm,
            "g2_norm": self.g2_norm,
            "g_sup_norm": self.g_sup_norm,
        }


@dataclass(frozen=True)
class ExponentFit:
    """Least-squares fit log(norm) = log C + A log(1 / delta).

    The fitted A is an observation about the surrogate Hilbert-norm problem; it is
    never compared against a target exponent.
    """

    deltas: tuple[float, ...]
    norms: tuple[float, ...]
    fitted_A: float  # noqa: N815
    fitted_logC: float  # noqa: N815
    fit_residual: float
    sup_fitted_A: float = float("nan")  # noqa: N815
    rows: tuple[SweepRow, ...] = field(default=(), compare=False)
    skipped: tuple[str, ...] = field(default=(), compare=False)

    @property
    def decades(self) -> float:
        return float(np.log10(max(self.deltas) / min(self.deltas)))

    def to_dict(self) -> dict[str, Any]:
        return {
            "deltas": list(self.deltas),
            "norms": list(self.norms),
            "fitted_A": self.fitted_A,
            "fitted_logC": self.fitted_logC,
            "fit_residual": self.fit_residual,
            "sup_fitted_A": self.sup_fitted_A,
            "skipped": list(self.skipped),
            "note": "fit of least-squares Hilbert norms; the algebra-norm exponent is open",
        }

    def to_rows(self) -> list[tuple[float, int, float, float, float]]:
        return [(r.delta, r.degree, r.residual, r.g1_norm, r.g2_norm) for r in self.rows]


def exponent_sweep(
    space: SpaceSpec,
    family: Sequence[CoronaInstance],
    degree_schedule: Sequence[int] = (0, 1, 2, 4, 8, 16),
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    threads: int = 1,
) -> ExponentFit:
    """Smallest accepted Bezout degree for each instance, then fit the norm growth.

    Raises:
        FamilyDegenerateError: if fewer than four instances converge or the converged
            deltas span fewer than ``tolerances.min_decades`` decades
    """
    if not family:
        raise FamilyDegenerateError("The family is empty")
    schedule = tuple(degree_schedule)

    def solve(inst: CoronaInstance) -> BezoutSolution | None:
        return minimal_bezout(space, inst, schedule, tolerances)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            solutions = list(pool.map(solve, family))
    else:
        solutions = [solve(inst) for inst in family]

    rows: list[SweepRow] = []
    skipped: list[str] = []
    for inst, solution in zip(family, solutions, strict=True):
        if solution is None:
            logger.warning(f"Instance {inst.label or inst.delta} did not converge; skipped")
            skipped.append(inst.label or f"{inst.delta:.6g}")
            continue
        rows.append(
            SweepRow(
                label=inst.label,
                delta=inst.delta,
                degree=solution.degree,
                residual=solution.residual,
                g1_norm=solution.g_norms[0],
                g2_norm=solution.g_norms[1],
                g_sup_norm=solution.max_sup_norm,
            )
        )
    if len(rows) < MIN_CONVERGED:
        raise FamilyDegenerateError(
            f"Only {len(rows)} of {len(family)} instances converged, need {MIN_CONVERGED}"
        )
    deltas = np.array([r.delta for r in rows])
    decades = float(np.log10(deltas.max() / deltas.min()))
    if decades < tolerances.min_decades:
        raise FamilyDegenerateError(
            f"Deltas span {decades:.2f} decades, need {tolerances.min_decades}"
        )
    norms = np.array([r.max_norm for r in rows])
    fit = line_fit(np.log(1.0 / deltas), np.log(norms))
    sup_fit = line_fit(np.log(1.0 / deltas), np.log([r.g_sup_norm for r in rows]))
    logger.info(
        f"Exponent sweep on {space.label}: A = {fit.slope:.4f} over {decades:.2f} decades "
        f"({len(rows)} instances, residual {fit.residual:.2e})"
    )
    return ExponentFit(
        deltas=tuple(float(d) for d in deltas),
        norms=tuple(float(n) for n in norms),
        fitted_A=fit.slope,
        fitted_logC=fit.intercept,
        fit_residual=fit.residual,
        sup_fitted_A=sup_fit.slope,
        rows=tuple(rows),
        skipped=tuple(skipped),
    )


def constant_family(
    ts: Sequence[float],
    grid: GridSpec = DEFAULT_GRID,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> list[CoronaInstance]:
    """f1 = z, f2 = t: delta = t and the exact solution g1 = 0, g2 = 1 / t."""
    z = Poly.monomial(1)
    return [
        CoronaInstance.build(z, Poly.constant(t), f"t={t:.6g}", grid, tolerances) for t in ts
    ]


def boundary_family(
    deltas: Sequence[float],
    grid: GridSpec = DEFAULT_GRID,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> list[CoronaInstance]:
    """f1 = (1 - z)^2 / 8, f2 = (1 + d - z) / (2 (2 + d)).

    Coprime with |f1| + |f2| <= 1 on the closed disc; the infimum sits near z = 1
    and shrinks linearly in d.
    """
    one_minus_z = Poly((1.0, -1.0))
    f1 = (one_minus_z**2).scaled(1 / 8)
    family = []
    for d in deltas:
        if d <= 0:
            raise ValueError(f"Family parameter must be positive, got {d}")
        f2 = Poly((1.0 + d, -1.0)).scaled(1 / (2 * (2 + d)))
        family.append(CoronaInstance.build(f1, f2, f"d={d:.6g}", grid, tolerances))
    return family
