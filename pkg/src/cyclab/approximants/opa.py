# this_file: src/cyclab/approximants/opa.py
"""Optimal polynomial approximants and distances to shifted spans."""

from dataclasses import dataclass
from typing import Any

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from scipy import linalg

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import NonHilbertSpaceError, PreconditionError
from ..polyrat import Poly
from ..spaces import SpaceSpec, hermitian_form
from ..utils.linalg import cholesky_lower, solve_hermitian


@dataclass(frozen=True)
class ApproximantResult:
    """Minimizer p of ||p f - target|| over deg p <= degree.

    Attributes:
        degree: Maximal degree of p
        coefficients: The minimizing polynomial p
        distance: ||p f - target|| in the space
        residual_poly: p f - target
        condition: Condition number of the normal-equation matrix
    """

    degree: int
    coefficients: Poly
    distance: float
    residual_poly: Poly
    condition: float = float("nan")

    def to_dict(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "coefficients": self.coefficients.to_json(),
            "distance": self.distance,
            "residual": self.residual_poly.to_json(),
            "condition": self.condition,
        }


def shift_matrix(f: Poly, degree: int) -> NDArray[np.complex128]:
    """Columns are the coefficient vectors of z^k f for k = 0..degree."""
    if degree < 0:
        raise ValueError(f"Degree must be nonnegative, got {degree}")
    rows = len(f.coeffs) + degree
    a = np.zeros((rows, degree + 1), dtype=complex)
    for k in range(degree + 1):
        a[k : k + len(f.coeffs), k] = f.coeffs
    return a


def _check_inputs(space: SpaceSpec, f: Poly) -> None:
    if f.is_zero:
        raise PreconditionError("Approximants need a nonzero function f")
    if not space.is_hilbert:
        raise NonHilbertSpaceError(
            f"{space.label} is not a Hilbert space; use opa_descent for p != 2"
        )


def _project(
    space: SpaceSpec, target: Poly, f: Poly, degree: int, tolerances: Tolerances
) -> ApproximantResult:
    _check_inputs(space, f)
    a = shift_matrix(f, degree)
    size = max(a.shape[0], len(target.coeffs), 1)
    if a.shape[0] < size:
        a = np.vstack([a, np.zeros((size - a.shape[0], degree + 1), dtype=complex)])
    form = hermitian_form(space, size)
    t = target.padded(size)
    normal = a.conj().T @ form @ a
    rhs = a.conj().T @ form @ t
    x = solve_hermitian(normal, rhs, tolerances.singular_condition)
    residual = a @ x - t
    dist2 = float(np.real(residual.conj() @ form @ residual))
    condition = float(np.linalg.cond(normal))
    return ApproximantResult(
        degree=degree,
        coefficients=Poly.from_array(x),
        distance=float(np.sqrt(max(dist2, 0.0))),
        residual_poly=Poly.from_array(residual),
        condition=condition,
    )


def opa(
    space: SpaceSpec, f: Poly, degree: int, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> ApproximantResult:
    """Optimal polynomial approximant of 1/f of degree <= ``degree``.

    Solves the normal equations A^H H A x = A^H H e_0, where the columns of A are
    z^k f and H is the space's form matrix.

    Raises:
        PreconditionError: if f is the zero polynomial
        NonHilbertSpaceError: for Besov spaces with p != 2
        SingularGramError: if the normal matrix has condition number above the limit
    """
    result = _project(space, Poly.constant(1.0), f, degree, tolerances)
    logger.debug(f"opa on {space.label}: degree {degree}, distance {result.distance:.6e}")
    return result


def dist_to_span(
    space: SpaceSpec,
    target: Poly,
    f: Poly,
    degree: int,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """dist(target, span{z^k f : k <= degree}) in the space."""
    return _project(space, target, f, degree, tolerances).distance


def approximant_distances(
    space: SpaceSpec, f: Poly, n_max: int, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> NDArray[np.float64]:
    """d_0, ..., d_{n_max} from one Cholesky factorization.

    The spans are nested, so the leading block of the Cholesky factor of the
    degree-n_max normal matrix solves every smaller degree:
    d_n^2 = ||1||^2 - sum_{k <= n} |y_k|^2 with y = L^{-1} A^H H e_0.
    """
    _check_inputs(space, f)
    a = shift_matrix(f, n_max)
    form = hermitian_form(space, a.shape[0])
    e0 = np.zeros(a.shape[0], dtype=complex)
    e0[0] = 1.0
    lower = cholesky_lower(a.conj().T @ form @ a, tolerances.singular_condition)
    y = linalg.solve_triangular(lower, a.conj().T @ form @ e0, lower=True)
    total = float(np.real(form[0, 0]))
    squares = total - np.cumsum(np.abs(y) ** 2)
    return np.sqrt(np.clip(squares, 0.0, None))
