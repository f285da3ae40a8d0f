# this_file: src/cyclab/approximants/scan.py
"""Cyclicity scans: distances along a degree schedule, decay fits and verdicts."""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Literal

import numpy as np
from loguru import logger

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..polyrat import Poly
from ..spaces import SpaceSpec
from ..utils.fitting import line_fit
from .opa import opa

Verdict = Literal["decaying", "plateau"]
DecayModel = Literal["plateau", "log", "power", "degenerate"]

# Simpler models first; ties go to the earlier entry.
MODEL_ORDER: tuple[DecayModel, ...] = ("plateau", "log", "power")
TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DecayFit:
    """Least-squares fit of log d_n on the tail of the schedule."""

    model: DecayModel
    params: dict[str, float]
    residual: float

    def to_dict(self) -> dict[str, Any]:
        return {"model": self.model, "params": dict(self.params), "residual": self.residual}


@dataclass(frozen=True)
class CyclicityReport:
    """Distances d_n on a degree schedule with a decay fit and a verdict."""

    degrees: tuple[int, ...]
    distances: tuple[float, ...]
    decay_fit: DecayFit
    verdict: Verdict
    thresholds: dict[str, float] = field(default_factory=dict, compare=False, hash=False)

    def distance(self, n: int) -> float:
        return self.distances[self.degrees.index(n)]

    def to_dict(self) -> dict[str, Any]:
        return {
            "degrees": list(self.degrees),
            "distances": list(self.distances),
            "decay_fit": self.decay_fit.to_dict(),
            "verdict": self.verdict,
            "thresholds": dict(self.thresholds),
        }

    def to_rows(self) -> list[tuple[int, float]]:
        return list(zip(self.degrees, self.distances, strict=True))


def default_schedule(n_max: int) -> list[int]:
    """0 followed by the powers of two up to n_max, with n_max itself appended."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    schedule = [0]
    k = 1
    while k <= n_max:
        schedule.append(k)
        k *= 2
    if schedule[-1] != n_max:
        schedule.append(n_max)
    return schedule


def fit_decay(degrees: Sequence[int], distances: Sequence[float]) -> DecayFit:
    """Pick among c (plateau), c / log n and c / n^beta by RMS residual of log d_n.

    Only the tail half of the points with n >= 2 and d_n > 0 enters the fit.
    """
    pairs = [(n, d) for n, d in zip(degrees, distances, strict=True) if n >= 2 and d > 0]
    tail = pairs[len(pairs) // 2 :] if len(pairs) > 2 else pairs
    if not tail:
        return DecayFit("degenerate", {}, 0.0)
    n = np.array([p[0] for p in tail], dtype=float)
    logd = np.log(np.array([p[1] for p in tail], dtype=float))

    fits: dict[DecayModel, DecayFit] = {}
    level = float(np.mean(logd))
    fits["plateau"] = DecayFit(
        "plateau", {"c": float(np.exp(level))}, float(np.sqrt(np.mean((logd - level) ** 2)))
    )
    loglog = np.log(np.log(n))
    log_level = float(np.mean(logd + loglog))
    fits["log"] = DecayFit(
        "log",
        {"c": float(np.exp(log_level))},
        float(np.sqrt(np.mean((logd + loglog - log_level) ** 2))),
    )
    if len(tail) >= 2:
        line = line_fit(np.log(n), logd)
        fits["power"] = DecayFit(
            "power", {"c": float(np.exp(line.intercept)), "beta": -line.slope}, line.residual
        )

    best = fits["plateau"]
    for model in MODEL_ORDER[1:]:
        candidate = fits.get(model)
        if candidate is not None and candidate.residual < best.residual - TIE_TOLERANCE:
            best = candidate
    return best


def plateau_verdict(
    d_final: float, d_half: float, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> Verdict:
    """Plateau when d stays above the floor and moves by at most the tolerance over a doubling."""
    stable = abs(d_final - d_half) <= tolerances.plateau_tolerance * d_final
    if d_final >= tolerances.plateau_floor and stable:
        return "plateau"
    return "decaying"


def cyclicity_scan(
    space: SpaceSpec,
    f: Poly,
    n_max: int,
    schedule: Sequence[int] | None = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    threads: int = 1,
) -> CyclicityReport:
    """Distances d_n(f) on the schedule (default: powers of two), fit and verdict.

    Degrees may be evaluated concurrently; results are assembled in schedule order.
    """
    base = list(schedule) if schedule is not None else default_schedule(n_max)
    if any(n < 0 or n > n_max for n in base):
        raise ValueError(f"Schedule entries must lie in [0, {n_max}]")
    degrees = sorted(set(base) | {n_max, n_max // 2})

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda n: opa(space, f, n, tolerances), degrees))
    else:
        results = [opa(space, f, n, tolerances) for n in degrees]
    distances = [r.distance for r in results]

    d_final = distances[degrees.index(n_max)]
    d_half = distances[degrees.index(n_max // 2)]
    verdict = plateau_verdict(d_final, d_half, tolerances)
    fit = fit_decay(degrees, distances)
    logger.info(
        f"Cyclicity scan on {space.label}: d_{n_max} = {d_final:.6g}, verdict {verdict}, "
        f"fit {fit.model}"
    )
    return CyclicityReport(
        degrees=tuple(degrees),
        distances=tuple(distances),
        decay_fit=fit,
        verdict=verdict,
        thresholds={
            "plateau_floor": tolerances.plateau_floor,
            "plateau_tolerance": tolerances.plateau_tolerance,
        },
    )
