# this_file: src/cyclab/approximants/bpe.py
"""Bounded point evaluation estimates at boundary points."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np
from loguru import logger
from scipy import linalg

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import NonHilbertSpaceError, PreconditionError
from ..spaces import SpaceSpec
from ..utils.linalg import cholesky_lower


@dataclass(frozen=True)
class BpeReport:
    """v_n = sup{|p(zeta)| : deg p <= n, ||p|| <= 1} for n = 0..n_max.

    Attributes:
        zeta: Boundary point
        values: v_0, ..., v_{n_max}
        bounded_flag: True when v_{n_max} - v_{n_max / 2} <= tolerance * v_{n_max}
        thresholds: Tolerance used for the flag
    """

    zeta: complex
    values: tuple[float, ...]
    bounded_flag: bool
    thresholds: dict[str, float] = field(default_factory=dict, compare=False, hash=False)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def value(self, n: int) -> float:
        return self.values[n]

    def to_dict(self) -> dict[str, Any]:
        return {
            "zeta": [self.zeta.real, self.zeta.imag],
            "values": list(self.values),
            "bounded_flag": self.bounded_flag,
            "thresholds": dict(self.thresholds),
        }

    def to_rows(self) -> list[tuple[int, float]]:
        return list(enumerate(self.values))


def bpe_estimate(
    space: SpaceSpec, zeta: complex, n_max: int, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> BpeReport:
    """All v_n from one Cholesky factor G = L L^H: v_n^2 = sum_{k <= n} |(L^{-1} e)_k|^2.

    Raises:
        PreconditionError: if zeta is not unimodular or n_max is negative
        SingularGramError: if the monomial Gram is numerically singular
    """
    point = complex(zeta)
    if abs(abs(point) - 1.0) > 1e-12:
        raise PreconditionError(f"Bounded point evaluation needs |zeta| = 1, got {point}")
    if n_max < 0:
        raise PreconditionError(f"n_max must be nonnegative, got {n_max}")
    if not space.is_hilbert:
        raise NonHilbertSpaceError(f"{space.label} is not a Hilbert space")
    gram = space.gram_entries(n_max + 1)
    lower = cholesky_lower(gram, tolerances.singular_condition)
    e = np.power(point, np.arange(n_max + 1))
    y = linalg.solve_triangular(lower, e, lower=True)
    values = np.sqrt(np.cumsum(np.abs(y) ** 2))
    last, half = float(values[-1]), float(values[n_max // 2])
    bounded = last - half <= tolerances.bpe_cauchy * last
    logger.debug(f"BPE on {space.label} at {point}: v_{n_max} = {last:.6g}, bounded={bounded}")
    return BpeReport(
        zeta=point,
        values=tuple(float(v) for v in values),
        bounded_flag=bool(bounded),
        thresholds={"cauchy_tolerance": tolerances.bpe_cauchy},
    )
