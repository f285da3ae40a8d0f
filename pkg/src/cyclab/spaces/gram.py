# this_file: src/cyclab/spaces/gram.py
"""Gram matrices, inner products and norms of polynomials in the function spaces."""

from dataclasses import dataclass
from typing import Any, Literal

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from scipy import linalg

from ..config import DEFAULT_TOLERANCES
from ..errors import NonHilbertSpaceError
from ..polyrat import Poly, sup_circle
from .quadrature import integrate_disc
from .spec import BesovDirichlet, Hardy, SpaceSpec


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Hermitian PSD matrix entries[m][n] = <e_m, e_n> of a listed basis.

    Attributes:
        entries: Square complex matrix
        basis_labels: One label per basis function, e.g. "z^3"
    """

    entries: NDArray[np.complex128]
    basis_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        m = np.asarray(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"Gram matrix must be square, got shape {m.shape}")
        if len(self.basis_labels) != m.shape[0]:
            raise ValueError(
                f"Expected {m.shape[0]} basis labels, got {len(self.basis_labels)}"
            )
        scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
        if m.size and np.max(np.abs(m - m.conj().T)) > 1e-12 * scale:
            raise ValueError("Gram matrix must be Hermitian")
        object.__setattr__(self, "entries", m)

    @property
    def size(self) -> int:
        return int(self.entries.shape[0])

    @property
    def form(self) -> NDArray[np.complex128]:
        """H with ||f||^2 = f^H H f for coefficient vectors f."""
        return np.asarray(self.entries.T, dtype=complex)

    @property
    def eigenvalues(self) -> NDArray[np.float64]:
        return np.asarray(linalg.eigvalsh(self.entries), dtype=float)

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def condition_number(self) -> float:
        eig = self.eigenvalues
        return float(eig[-1] / eig[0]) if eig[0] > 0 else float("inf")

    def is_psd(self, tol: float = DEFAULT_TOLERANCES.psd_floor) -> bool:
        eig = self.eigenvalues
        return bool(eig[0] >= -tol * max(float(eig[-1]), 0.0))

    def to_dict(self) -> dict[str, Any]:
        return {
            "basis": list(self.basis_labels),
            "entries": [[[v.real, v.imag] for v in row] for row in self.entries],
        }


def hermitian_form(space: SpaceSpec, size: int) -> NDArray[np.complex128]:
    """Form matrix H of the space on polynomials of degree < size.

    Raises:
        NonHilbertSpaceError: for Besov spaces with p != 2
    """
    if size < 0:
        raise ValueError(f"Form size must be nonnegative, got {size}")
    return np.asarray(space.gram_entries(size).T, dtype=complex)


def monomial_gram(space: SpaceSpec, n_max: int) -> GramMatrix:
    """Gram matrix of chi_0, ..., chi_{n_max}."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    entries = space.gram_entries(n_max + 1)
    logger.debug(f"Monomial Gram for {space.label}: size {n_max + 1}")
    return GramMatrix(entries, tuple(f"z^{k}" for k in range(n_max + 1)))


def inner(space: SpaceSpec, f: Poly, g: Poly) -> complex:
    """<f, g> in the space, linear in f and conjugate-linear in g."""
    if not space.is_hilbert:
        raise NonHilbertSpaceError(f"No inner product on {space.label}")
    size = max(len(f.coeffs), len(g.coeffs), 1)
    form = hermitian_form(space, size)
    return complex(g.padded(size).conj() @ form @ f.padded(size))


def _besov_integral(space: BesovDirichlet, f: Poly, check: bool) -> float:
    """int_D |f'|^p (1 - |z|^2)^alpha dA, by quadrature."""
    df = f.derivative()
    if df.is_zero:
        return 0.0
    tol = DEFAULT_TOLERANCES.quadrature_convergence if check else None
    value, _ = integrate_disc(
        lambda z: np.abs(df(z)) ** space.p, space.quadrature, space.alpha, tol
    )
    return value


def norm(space: SpaceSpec, f: Poly, algebra_norm: bool = False, check: bool = True) -> float:
    """Space norm of f, or the displayed Besov algebra norm when ``algebra_norm`` is set.

    Hilbert spaces use the exact Gram form. Besov spaces with p != 2 (and the
    algebra variant) integrate |f'|^p by quadrature, checked under node doubling.
    """
    if f.is_zero:
        return 0.0
    if algebra_norm:
        return algebra_norm_estimate(space, f, check).value
    if isinstance(space, BesovDirichlet) and not space.is_hilbert:
        if space.exploratory:
            logger.warning(f"{space.label} lies outside the standing band ({space.regime})")
        integral = _besov_integral(space, f, check)
        head = abs(f.coefficient(0)) ** space.p
        return float((head + (1.0 + space.alpha) * integral) ** (1.0 / space.p))
    size = len(f.coeffs)
    value = np.real(f.array.conj() @ hermitian_form(space, size) @ f.array)
    return float(np.sqrt(max(value, 0.0)))


NormKind = Literal["exact", "displayed", "equivalent"]


@dataclass(frozen=True)
class NormEstimate:
    """A multiplier-algebra norm surrogate with a tag saying how it relates to the true norm."""

    value: float
    kind: NormKind

    def to_dict(self) -> dict[str, Any]:
        return {"value": self.value, "kind": self.kind}


def algebra_norm_estimate(space: SpaceSpec, f: Poly, check: bool = True) -> NormEstimate:
    """Algebra norm used for corona and growth experiments.

    Hardy gives the sup norm (the multiplier norm itself). Besov spaces give the
    displayed norm (sup^p + int |f'|^p (1 - |z|^2)^alpha dA)^(1/p) without the
    (1 + alpha) factor. The remaining spaces use the equivalent norm
    ||f||_inf + ||f||_X.
    """
    if f.is_zero:
        return NormEstimate(0.0, "exact")
    sup = sup_circle(f)
    if isinstance(space, Hardy):
        return NormEstimate(sup, "exact")
    if isinstance(space, BesovDirichlet):
        integral = _besov_integral(space, f, check)
        return NormEstimate(float((sup**space.p + integral) ** (1.0 / space.p)), "displayed")
    return NormEstimate(sup + norm(space, f), "equivalent")
