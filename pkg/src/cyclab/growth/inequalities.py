# this_file: src/cyclab/growth/inequalities.py
"""Multiplier-norm lower bounds, the resolvent series bound and power sums."""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from loguru import logger

from ..approximants import shift_matrix
from ..errors import DivergenceError, NonConvergenceError, NonHilbertSpaceError, PreconditionError
from ..polyrat import Poly, sup_circle
from ..spaces import SpaceSpec, hermitian_form, norm
from ..utils.linalg import generalized_max_eigenvalue

CHUNK = 4096
MAX_TERMS = 10**8


@dataclass(frozen=True)
class MultiplierCheck:
    """Lower bounds for the multiplier norm of phi.

    Attributes:
        op_norm_lower: sup ||phi q|| / ||q|| over deg q <= n_max
        sup_norm: Sampled sup |phi| on the circle
        space_norm: ||phi|| in the space
        combined_lower_bound: max(op_norm_lower, space_norm / ||1||)
        n_max: Section degree
    """

    op_norm_lower: float
    sup_norm: float
    space_norm: float
    combined_lower_bound: float
    n_max: int

    @property
    def sup_gap(self) -> float:
        """sup_norm - op_norm_lower; the sections close this gap from above."""
        return self.sup_norm - self.op_norm_lower

    def to_dict(self) -> dict[str, Any]:
        return {
            "op_norm_lower": self.op_norm_lower,
            "sup_norm": self.sup_norm,
            "space_norm": self.space_norm,
            "combined_lower_bound": self.combined_lower_bound,
            "sup_gap": self.sup_gap,
            "n_max": self.n_max,
            "direction": "all three values are lower bounds for the multiplier norm",
        }


def section_norm(space: SpaceSpec, phi: Poly, n_max: int) -> float:
    """Norm of q -> phi q on polynomials of degree <= n_max, by a generalized eigenproblem."""
    if not space.is_hilbert:
        raise NonHilbertSpaceError(f"{space.label} is not a Hilbert space")
    if phi.is_zero:
        return 0.0
    a = shift_matrix(phi, n_max)
    image = a.conj().T @ hermitian_form(space, a.shape[0]) @ a
    source = hermitian_form(space, n_max + 1)
    return float(np.sqrt(max(generalized_max_eigenvalue(image, source), 0.0)))


def multiplier_inequality_check(space: SpaceSpec, phi: Poly, n_max: int) -> MultiplierCheck:
    """Section lower bound for ||phi||_M next to ||phi||_inf and ||phi||_X.

    Raises:
        NonHilbertSpaceError: for Besov spaces with p != 2
        SingularGramError: if the section Gram is not positive definite
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    lower = section_norm(space, phi, n_max)
    space_norm = norm(space, phi)
    one = norm(space, Poly.constant(1.0))
    return MultiplierCheck(
        op_norm_lower=lower,
        sup_norm=sup_circle(phi),
        space_norm=space_norm,
        combined_lower_bound=max(lower, space_norm / one),
        n_max=n_max,
    )


@dataclass(frozen=True)
class SectionSweep:
    """Section lower bounds along a degree schedule."""

    degrees: tuple[int, ...]
    lower_bounds: tuple[float, ...]
    sup_norm: float

    @property
    def gaps(self) -> tuple[float, ...]:
        return tuple(self.sup_norm - v for v in self.lower_bounds)

    @property
    def monotone(self) -> bool:
        pairs = zip(self.lower_bounds, self.lower_bounds[1:], strict=False)
        return all(b >= a - 1e-10 * max(1.0, a) for a, b in pairs)

    def reached(self, tol: float = 1e-6) -> bool:
        return self.sup_norm <= self.lower_bounds[-1] + tol

    def to_dict(self) -> dict[str, Any]:
        return {
            "degrees": list(self.degrees),
            "lower_bounds": list(self.lower_bounds),
            "sup_norm": self.sup_norm,
            "gaps": list(self.gaps),
            "monotone": self.monotone,
            "reached": self.reached(),
        }

    def to_rows(self) -> list[tuple[int, float, float]]:
        return list(zip(self.degrees, self.lower_bounds, self.gaps, strict=True))


def multiplier_section_sweep(
    space: SpaceSpec, phi: Poly, schedule: Sequence[int] = (0, 1, 2, 4, 8, 16, 32, 64)
) -> SectionSweep:
    """Nested sections give a nondecreasing sequence of lower bounds."""
    degrees = tuple(sorted(set(schedule)))
    bounds = tuple(section_norm(space, phi, n) for n in degrees)
    sweep = SectionSweep(degrees, bounds, sup_circle(phi))
    if not sweep.monotone:
        logger.warning(f"Section bounds for {space.label} are not monotone: {bounds}")
    return sweep


def _power_series(p: int, x: float, start: int, tol: float) -> float:
    """sum_{n >= start} n^p x^n, summed in chunks until the geometric tail is below tol."""
    parts: list[float] = []
    total = 0.0
    first = start
    log_x = math.log(x)
    while first < MAX_TERMS:
        n = np.arange(first, first + CHUNK, dtype=float)
        if p == 0:
            terms = np.exp(n * log_x)
        else:
            with np.errstate(divide="ignore"):
                terms = np.exp(p * np.log(n) + n * log_x)
        parts.append(math.fsum(terms))
        total = math.fsum(parts)
        last = float(n[-1])
        ratio = x * ((last + 1.0) / last) ** p if last > 0 else x
        if ratio < 1.0:
            tail = float(terms[-1]) * ratio / (1.0 - ratio)
            if tail < tol * max(1.0, total):
                return total
        first += CHUNK
    raise NonConvergenceError(f"Power series with x={x} did not converge in {MAX_TERMS} terms")


@dataclass(frozen=True)
class PowerSumCheck:
    """sum n^p x^n against p! / (1 - x)^(p + 1)."""

    p: int
    x: float
    lhs: float
    rhs: float
    closed_form: float

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs * (1.0 + 1e-12)

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "x": self.x,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "closed_form": self.closed_form,
            "holds": self.holds,
        }


def eulerian_numbers(p: int) -> list[int]:
    """A(p, k) for k = 0..p-1."""
    return [
        sum((-1) ** j * math.comb(p + 1, j) * (k + 1 - j) ** p for j in range(k + 1))
        for k in range(p)
    ]


def power_sum_closed_form(p: int, x: float) -> float:
    """sum_{n >= 0} n^p x^n = x A_p(x) / (1 - x)^(p + 1), with 1 / (1 - x) at p = 0."""
    if not 0 < x < 1:
        raise PreconditionError(f"x must lie in (0, 1), got {x}")
    if p < 0:
        raise PreconditionError(f"p must be a nonnegative integer, got {p}")
    if p == 0:
        return 1.0 / (1.0 - x)
    eulerian = sum(a * x**k for k, a in enumerate(eulerian_numbers(p)))
    return x * eulerian / (1.0 - x) ** (p + 1)


def power_sum_inequality(p: int, x: float) -> PowerSumCheck:
    """sum_{n >= 0} n^p x^n <= p! / (1 - x)^(p + 1)."""
    closed = power_sum_closed_form(p, x)
    lhs = _power_series(p, x, 0, 1e-14)
    rhs = math.factorial(p) / (1.0 - x) ** (p + 1)
    return PowerSumCheck(p, x, lhs, rhs, closed)


@dataclass(frozen=True)
class ResolventCheck:
    """sum c(n) / |lambda|^(n + 1) against C p! |lambda|^(p + 1) / (|lambda| - 1)^(p + 1)."""

    series_value: float
    bound: float
    constant: float
    tail: float
    terms: int

    @property
    def holds(self) -> bool:
        return self.series_value <= self.bound + 1e-9

    def to_dict(self) -> dict[str, Any]:
        return {
            "series_value": self.series_value,
            "bound": self.bound,
            "constant": self.constant,
            "tail": self.tail,
            "terms": self.terms,
            "holds": self.holds,
        }


def resolvent_bound_check(c_seq: Sequence[float], p: int, lam: complex) -> ResolventCheck:
    """Bound the resolvent series from monomial norms c(n) <= C max(n, 1)^p.

    Terms past the end of ``c_seq`` are bounded by C n^p / |lambda|^(n + 1).

    Raises:
        DivergenceError: if |lambda| <= 1
        PreconditionError: if |lambda| <= 1 + 1e-6, p < 0 or c_seq is empty
    """
    radius = abs(complex(lam))
    if radius <= 1.0:
        raise DivergenceError(f"The resolvent series diverges for |lambda| = {radius} <= 1")
    if radius <= 1.0 + 1e-6:
        raise PreconditionError(f"|lambda| = {radius} is too close to the circle")
    if p < 0:
        raise PreconditionError(f"p must be a nonnegative integer, got {p}")
    values = np.asarray(c_seq, dtype=float)
    if values.size == 0:
        raise PreconditionError("The monomial norm sequence is empty")
    n = np.arange(values.size)
    constant = float(np.max(values / np.maximum(n, 1).astype(float) ** p))
    x = 1.0 / radius
    head = math.fsum(values * x ** (n + 1))
    tail = constant * x * _power_series(p, x, values.size, 1e-13)
    bound = constant * math.factorial(p) / (1.0 - x) ** (p + 1)
    return ResolventCheck(head + tail, bound, constant, tail, int(values.size))
