# this_file: src/cyclab/utils/linalg.py
"""Hermitian solves, condition numbers and generalized eigenvalues for Gram systems."""

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from scipy import linalg

from ..errors import SingularGramError

ComplexMatrix = NDArray[np.complex128]


def hermitize(matrix: ComplexMatrix) -> ComplexMatrix:
    """Average a nearly Hermitian matrix with its adjoint."""
    m = np.asarray(matrix, dtype=complex)
    return 0.5 * (m + m.conj().T)


def hermitian_condition(matrix: ComplexMatrix) -> float:
    """2-norm condition number of a Hermitian PSD matrix (inf when singular)."""
    eig = linalg.eigvalsh(hermitize(matrix))
    largest = float(np.max(np.abs(eig)))
    smallest = float(np.min(eig))
    if smallest <= 0.0:
        return float("inf")
    return largest / smallest


def solve_hermitian(
    matrix: ComplexMatrix, rhs: NDArray[np.complex128], condition_limit: float
) -> NDArray[np.complex128]:
    """Solve M x = rhs for Hermitian positive definite M.

    Cholesky first, with a symmetric-indefinite solve as fallback when the
    factorization breaks down on a matrix that is still within the condition limit.

    Raises:
        SingularGramError: if cond(M) exceeds ``condition_limit`` or both solves fail
    """
    m = hermitize(matrix)
    if m.size == 0:
        return np.zeros(0, dtype=complex)
    condition = hermitian_condition(m)
    logger.debug(f"Gram solve: size {m.shape[0]}, condition {condition:.3e}")
    if condition > condition_limit:
        raise SingularGramError(
            f"Gram matrix is numerically singular (condition {condition:.3e})", condition
        )
    try:
        factor = linalg.cho_factor(m, lower=True)
        return np.asarray(linalg.cho_solve(factor, rhs), dtype=complex)
    except linalg.LinAlgError:
        logger.debug("Cholesky failed, falling back to a Hermitian indefinite solve")
    try:
        return np.asarray(linalg.solve(m, rhs, assume_a="her"), dtype=complex)
    except linalg.LinAlgError as exc:
        raise SingularGramError(f"Gram solve failed: {exc}", condition) from exc


def cholesky_lower(matrix: ComplexMatrix, condition_limit: float | None = None) -> ComplexMatrix:
    """Lower Cholesky factor L with M = L L^H.

    Raises:
        SingularGramError: if M is not numerically positive definite
    """
    m = hermitize(matrix)
    if condition_limit is not None:
        condition = hermitian_condition(m)
        if condition > condition_limit:
            raise SingularGramError(
                f"Gram matrix is numerically singular (condition {condition:.3e})", condition
            )
    try:
        return np.asarray(linalg.cholesky(m, lower=True), dtype=complex)
    except linalg.LinAlgError as exc:
        raise SingularGramError(f"Cholesky factorization failed: {exc}") from exc


def generalized_max_eigenvalue(a: ComplexMatrix, b: ComplexMatrix) -> float:
    """Largest lambda with a x = lambda b x for Hermitian a and positive definite b."""
    try:
        eig = linalg.eigh(hermitize(a), hermitize(b), eigvals_only=True)
    except linalg.LinAlgError as exc:
        raise SingularGramError(f"Generalized eigenproblem failed: {exc}") from exc
    return float(np.max(eig))
