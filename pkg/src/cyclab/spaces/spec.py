# this_file: src/cyclab/spaces/spec.py
"""The five function spaces on the unit disc and their monomial Gram entries."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, ClassVar, Literal

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from scipy import linalg, special

from ..errors import FactorizationError, NonHilbertSpaceError
from ..polyrat import RationalMate, Rat
from ..polyrat import mate as compute_mate
from .dirichlet import MeasureAtoms, local_dirichlet_gram
from .quadrature import QuadratureSpec

BesovRegime = Literal["outer-cyclic", "standing", "algebra-invertible-only"]


def besov_regime(p: float, alpha: float) -> BesovRegime:
    """Classify D_alpha^p parameters relative to the band alpha + 1 <= p <= alpha + 2."""
    if p < alpha + 1:
        return "outer-cyclic"
    if p > alpha + 2:
        return "algebra-invertible-only"
    return "standing"


def dirichlet_weights(alpha: float, size: int) -> NDArray[np.float64]:
    """w_0 = 1 and w_n = (1 + alpha) n^2 B(n, alpha + 1): ||chi_n||^2 in D_alpha^2."""
    n = np.arange(size, dtype=float)
    weights = np.ones(size, dtype=float)
    if size > 1:
        weights[1:] = (1.0 + alpha) * n[1:] ** 2 * special.beta(n[1:], alpha + 1.0)
    return weights


@dataclass(frozen=True)
class SpaceSpec(ABC):
    """A reproducing kernel space of analytic functions on the disc."""

    quadrature: QuadratureSpec = field(default_factory=QuadratureSpec, kw_only=True)

    kind: ClassVar[str] = ""

    @property
    def is_hilbert(self) -> bool:
        return True

    @property
    @abstractmethod
    def label(self) -> str:
        """Short human-readable name."""

    @abstractmethod
    def params(self) -> dict[str, Any]:
        """JSON-ready parameters."""

    @abstractmethod
    def gram_entries(self, size: int) -> NDArray[np.complex128]:
        """entries[m][n] = <chi_m, chi_n> for m, n < size."""

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "params": self.params(),
            "quadrature": self.quadrature.to_dict(),
        }


@dataclass(frozen=True)
class Hardy(SpaceSpec):
    """H^2: orthonormal monomials."""

    kind: ClassVar[str] = "hardy"

    @property
    def label(self) -> str:
        return "H2"

    def params(self) -> dict[str, Any]:
        return {}

    def gram_entries(self, size: int) -> NDArray[np.complex128]:
        return np.eye(size, dtype=complex)


@dataclass(frozen=True)
class BesovDirichlet(SpaceSpec):
    """D_alpha^p: |f(0)|^p + (1 + alpha) int |f'|^p (1 - |z|^2)^alpha dA."""

    p: float = 2.0
    alpha: float = 0.0

    kind: ClassVar[str] = "besov-dirichlet"

    def __post_init__(self) -> None:
        if not self.p > 1:
            raise ValueError(f"Besov exponent p must exceed 1, got {self.p}")
        if not self.alpha > -1:
            raise ValueError(f"Weight exponent alpha must exceed -1, got {self.alpha}")

    @property
    def is_hilbert(self) -> bool:
        return self.p == 2.0

    @property
    def regime(self) -> BesovRegime:
        return besov_regime(self.p, self.alpha)

    @property
    def exploratory(self) -> bool:
        """True outside the standing band alpha + 1 <= p <= alpha + 2."""
        return self.regime != "standing"

    @property
    def label(self) -> str:
        return f"D^{self.p:g}_{self.alpha:g}"

    def params(self) -> dict[str, Any]:
        return {"p": self.p, "alpha": self.alpha}

    def gram_entries(self, size: int) -> NDArray[np.complex128]:
        if not self.is_hilbert:
            raise NonHilbertSpaceError(f"{self.label} is not a Hilbert space (p={self.p:g})")
        return np.diag(dirichlet_weights(self.alpha, size)).astype(complex)


@dataclass(frozen=True)
class WeightedDirichlet(SpaceSpec):
    """D_alpha = D_alpha^2; alpha = 0 is the classical Dirichlet space."""

    alpha: float = 0.0

    kind: ClassVar[str] = "weighted-dirichlet"

    def __post_init__(self) -> None:
        if not self.alpha > -1:
            raise ValueError(f"Weight exponent alpha must exceed -1, got {self.alpha}")

    @property
    def p(self) -> float:
        return 2.0

    @property
    def label(self) -> str:
        return f"D_{self.alpha:g}"

    def params(self) -> dict[str, Any]:
        return {"alpha": self.alpha}

    def gram_entries(self, size: int) -> NDArray[np.complex128]:
        return np.diag(dirichlet_weights(self.alpha, size)).astype(complex)


@dataclass(frozen=True)
class DeBrangesRovnyak(SpaceSpec):
    """H(b) for a rational non-inner symbol b, represented through its mate."""

    mate: RationalMate

    kind: ClassVar[str] = "de-branges-rovnyak"

    @classmethod
    def from_symbol(cls, b: Rat, n_max: int = 64, **kwargs: Any) -> "DeBrangesRovnyak":
        return cls(compute_mate(b, n_max=n_max), **kwargs)

    @property
    def label(self) -> str:
        return "H(b)"

    def params(self) -> dict[str, Any]:
        return {"b": self.mate.b.to_json()}

    def gram_entries(self, size: int) -> NDArray[np.complex128]:
        """I + P^T conj(P) with P[i][n] = conj(c_{n-i}) the plus-function matrix."""
        c = self.mate.coefficients(size)
        first_col = np.zeros(size, dtype=complex)
        if size:
            first_col[0] = np.conj(c[0])
        plus = linalg.toeplitz(first_col, np.conj(c))
        entries = np.eye(size, dtype=complex) + plus.T @ plus.conj()
        expected = 1.0 + np.cumsum(np.abs(c) ** 2)
        mismatch = float(np.max(np.abs(np.real(np.diag(entries)) - expected))) if size else 0.0
        if mismatch > 1e-9 * max(1.0, float(expected[-1]) if size else 1.0):
            raise FactorizationError(f"H(b) Gram diagonal off by {mismatch:.3g}")
        return entries


@dataclass(frozen=True)
class HarmonicDirichlet(SpaceSpec):
    """D(mu) for a finite atomic measure mu on the closed disc."""

    atoms: MeasureAtoms

    kind: ClassVar[str] = "harmonic-dirichlet"

    @property
    def label(self) -> str:
        return "D(mu)"

    def params(self) -> dict[str, Any]:
        return {"atoms": self.atoms.to_json()}

    def gram_entries(self, size: int) -> NDArray[np.complex128]:
        return np.eye(size, dtype=complex) + local_dirichlet_gram(self.atoms, size)


SPACE_KINDS: dict[str, type[SpaceSpec]] = {
    cls.kind: cls
    for cls in (Hardy, WeightedDirichlet, BesovDirichlet, DeBrangesRovnyak, HarmonicDirichlet)
}


def standing_assumption_ok(space: SpaceSpec) -> bool:
    """False only for a Besov space outside alpha + 1 <= p <= alpha + 2."""
    if isinstance(space, BesovDirichlet):
        return not space.exploratory
    return True


def space_from_dict(data: dict[str, Any]) -> SpaceSpec:
    """Build a space from {"kind": ..., "params": {...}, "quadrature": {...}}.

    Raises:
        ValueError: if the kind is unknown or parameters are missing
    """
    kind = data.get("kind", "")
    params = dict(data.get("params") or {})
    quadrature = QuadratureSpec.from_dict(data.get("quadrature") or {})
    if kind not in SPACE_KINDS:
        raise ValueError(f"Unknown space kind: {kind!r}")
    if kind == Hardy.kind:
        return Hardy(quadrature=quadrature)
    if kind == WeightedDirichlet.kind:
        return WeightedDirichlet(float(params.get("alpha", 0.0)), quadrature=quadrature)
    if kind == BesovDirichlet.kind:
        space = BesovDirichlet(
            float(params.get("p", 2.0)), float(params.get("alpha", 0.0)), quadrature=quadrature
        )
        if space.exploratory:
            logger.warning(f"{space.label} lies outside the standing band ({space.regime})")
        return space
    if kind == DeBrangesRovnyak.kind:
        if "b" not in params:
            raise ValueError("de Branges–Rovnyak space needs a symbol 'b'")
        b = params["b"]
        symbol = Rat.from_json(b) if isinstance(b, dict) else Rat.from_json({"num": b})
        return DeBrangesRovnyak.from_symbol(
            symbol, n_max=int(params.get("n_max", 64)), quadrature=quadrature
        )
    if "atoms" not in params:
        raise ValueError("Harmonically weighted Dirichlet space needs 'atoms'")
    return HarmonicDirichlet(MeasureAtoms.from_json(params["atoms"]), quadrature=quadrature)
