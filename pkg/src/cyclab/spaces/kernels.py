# this_file: src/cyclab/spaces/kernels.py
"""Reproducing kernels k_lambda(z)."""

from math import ceil, log

import numpy as np
from loguru import logger

from ..config import DEFAULT_TOLERANCES
from ..errors import NonHilbertSpaceError, PreconditionError
from ..utils.linalg import solve_hermitian
from .spec import (
    BesovDirichlet,
    DeBrangesRovnyak,
    Hardy,
    HarmonicDirichlet,
    SpaceSpec,
    WeightedDirichlet,
    dirichlet_weights,
)

SERIES_FLOOR = 1e-16
MAX_SERIES_TERMS = 10**6
KERNEL_DEGREE = 128


def _check_disc(point: complex, name: str) -> None:
    if abs(point) >= 1.0:
        raise PreconditionError(f"{name} must lie in the open disc, got {point}")


def _diagonal_series(alpha: float, x: complex) -> complex:
    """sum_n x^n / w_n with the D_alpha weights, truncated once terms drop below the floor."""
    if x == 0:
        return 1.0 + 0j
    terms = ceil(log(SERIES_FLOOR) / log(abs(x))) + 2
    if terms > MAX_SERIES_TERMS:
        logger.warning(f"Kernel series truncated at {MAX_SERIES_TERMS} terms (|x|={abs(x):.6f})")
        terms = MAX_SERIES_TERMS
    n = np.arange(terms)
    return complex(np.sum(np.power(x, n) / dirichlet_weights(alpha, terms)))


def kernel(
    space: SpaceSpec, lam: complex, z: complex, kernel_degree: int = KERNEL_DEGREE
) -> complex:
    """Value k_lambda(z) of the reproducing kernel at lambda, evaluated at z.

    Hardy and H(b) use closed forms, the diagonal Dirichlet spaces their power
    series, and D(mu) the finite-section kernel on polynomials of degree
    <= ``kernel_degree``.

    Raises:
        PreconditionError: if lambda or z leaves the open disc
        NonHilbertSpaceError: for Besov spaces with p != 2
    """
    _check_disc(lam, "lambda")
    _check_disc(z, "z")
    x = np.conj(lam) * z
    if isinstance(space, Hardy):
        return complex(1.0 / (1.0 - x))
    if isinstance(space, DeBrangesRovnyak):
        b = space.mate.b
        return complex((1.0 - np.conj(b(lam)) * b(z)) / (1.0 - x))
    if isinstance(space, WeightedDirichlet):
        return _diagonal_series(space.alpha, complex(x))
    if isinstance(space, BesovDirichlet):
        if not space.is_hilbert:
            raise NonHilbertSpaceError(f"{space.label} has no reproducing kernel")
        return _diagonal_series(space.alpha, complex(x))
    if isinstance(space, HarmonicDirichlet):
        size = kernel_degree + 1
        powers = np.arange(size)
        e_lam = np.power(complex(lam), powers)
        e_z = np.power(complex(z), powers)
        coeffs = solve_hermitian(
            space.gram_entries(size), e_lam, DEFAULT_TOLERANCES.singular_condition
        )
        return complex(e_z @ np.conj(coeffs))
    raise TypeError(f"Unsupported space: {type(space).__name__}")
