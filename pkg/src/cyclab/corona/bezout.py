# this_file: src/cyclab/corona/bezout.py
"""Least-squares Bezout pairs: minimize ||f1 g1 + f2 g2 - 1|| over polynomial g1, g2."""

from dataclasses import dataclass
from typing import Any

import numpy as np
from loguru import logger
from scipy import linalg

from ..approximants import shift_matrix
from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import NonHilbertSpaceError, SingularGramError
from ..polyrat import Poly, sup_circle
from ..spaces import SpaceSpec, hermitian_form, norm
from ..utils.linalg import cholesky_lower
from .instance import CoronaInstance


@dataclass(frozen=True)
class BezoutSolution:
    """A polynomial pair (g1, g2) with the norm of f1 g1 + f2 g2 - 1.

    Attributes:
        g1, g2: Minimizing pair of degree <= ``degree``
        residual: Space norm of the explicitly formed f1 g1 + f2 g2 - 1
        g_norms: Space norms of g1 and g2
        g_sup_norms: Sampled sup norms on the circle (lower bounds for multiplier norms)
        degree: Degree bound of the search
        accepted: residual below the acceptance tolerance
    """

    g1: Poly
    g2: Poly
    residual: float
    g_norms: tuple[float, float]
    g_sup_norms: tuple[float, float]
    degree: int
    accepted: bool

    @property
    def max_norm(self) -> float:
        return max(self.g_norms)

    @property
    def max_sup_norm(self) -> float:
        return max(self.g_sup_norms)

    def to_dict(self) -> dict[str, Any]:
        return {
            "g1": self.g1.to_json(),
            "g2": self.g2.to_json(),
            "residual": self.residual,
            "g_norms": list(self.g_norms),
            "g_sup_norms": list(self.g_sup_norms),
            "degree": self.degree,
            "accepted": self.accepted,
        }


def bezout_ls(
    space: SpaceSpec,
    inst: CoronaInstance,
    degree: int,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> BezoutSolution:
    """Least-squares Bezout pair of degree <= ``degree`` in the space norm.

    With H = L L^H the form matrix, ||h||^2 = ||L^H h||_2^2, so the problem is the
    ordinary least-squares problem L^H [A1 A2] x = L^H e_0 where the columns of A1
    and A2 are z^k f1 and z^k f2. The minimum-norm solution is taken, which keeps
    rank-deficient sections above the Bezout degree well defined.

    Raises:
        NonHilbertSpaceError: for Besov spaces with p != 2
        SingularGramError: if the form matrix or the combined system is degenerate
    """
    if not space.is_hilbert:
        raise NonHilbertSpaceError(f"{space.label} is not a Hilbert space")
    if degree < 0:
        raise ValueError(f"Degree must be nonnegative, got {degree}")
    a1 = shift_matrix(inst.f1, degree)
    a2 = shift_matrix(inst.f2, degree)
    rows = max(a1.shape[0], a2.shape[0])
    a1 = np.vstack([a1, np.zeros((rows - a1.shape[0], degree + 1), dtype=complex)])
    a2 = np.vstack([a2, np.zeros((rows - a2.shape[0], degree + 1), dtype=complex)])
    system = np.hstack([a1, a2])
    if not np.any(system):
        raise SingularGramError("f1 and f2 are both zero")

    upper = cholesky_lower(hermitian_form(space, rows), tolerances.singular_condition).conj().T
    e0 = np.zeros(rows, dtype=complex)
    e0[0] = 1.0
    x, _, rank, _ = linalg.lstsq(upper @ system, upper @ e0, lapack_driver="gelsd")
    g1 = Poly.from_array(x[: degree + 1])
    g2 = Poly.from_array(x[degree + 1 :])
    combination = inst.f1 * g1 + inst.f2 * g2 - 1.0
    residual = norm(space, combination)
    solution = BezoutSolution(
        g1=g1,
        g2=g2,
        residual=residual,
        g_norms=(norm(space, g1), norm(space, g2)),
        g_sup_norms=(sup_circle(g1), sup_circle(g2)),
        degree=degree,
        accepted=residual < tolerances.bezout_accept,
    )
    logger.debug(
        f"Bezout degree {degree} on {space.label}: residual {residual:.3e}, rank {rank}, "
        f"max norm {solution.max_norm:.6g}"
    )
    return solution


def minimal_bezout(
    space: SpaceSpec,
    inst: CoronaInstance,
    degree_schedule: list[int] | tuple[int, ...],
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> BezoutSolution | None:
    """First accepted solution along the schedule, or None."""
    for degree in sorted(degree_schedule):
        solution = bezout_ls(space, inst, degree, tolerances)
        if solution.accepted:
            return solution
    return None
