# this_file: src/cyclab/approximants/descent.py
"""Optimal approximants in Besov spaces D_alpha^p with p != 2, by convex descent.

The objective ||p f - 1||^p = |h(0)|^p + (1 + alpha) int |h'|^p (1 - |z|^2)^alpha dA
with h = p f - 1 is strictly convex for p > 1. It is minimized over the real and
imaginary parts of the coefficients of p with BFGS and an analytic gradient,
finished by damped Newton steps on the exact Hessian.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from scipy import optimize

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import NonConvergenceError, PreconditionError
from ..polyrat import Poly
from ..spaces import BesovDirichlet, disc_rule
from .opa import ApproximantResult, opa, shift_matrix


@dataclass(frozen=True)
class DescentParams:
    """Controls for the convex descent.

    Attributes:
        max_iterations: BFGS iteration cap per attempt
        restarts: Extra attempts started from the previous iterate
        warm_start: Start from the p = 2 approximant in D_alpha
    """

    max_iterations: int = 2000
    restarts: int = 3
    warm_start: bool = True

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError(f"Iteration cap must be positive, got {self.max_iterations}")
        if self.restarts < 0:
            raise ValueError(f"Restarts must be nonnegative, got {self.restarts}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_iterations": self.max_iterations,
            "restarts": self.restarts,
            "warm_start": self.warm_start,
        }


def _signed_power(w: NDArray[np.complex128], p: float) -> NDArray[np.complex128]:
    """|w|^(p-2) w, extended by 0 at w = 0."""
    modulus = np.abs(w)
    safe = np.where(modulus > 0.0, modulus, 1.0)
    return np.where(modulus > 0.0, safe ** (p - 2.0) * w, 0.0)


class _Objective:
    """F(x) and its real gradient for x = (Re c, Im c)."""

    def __init__(self, space: BesovDirichlet, f: Poly, degree: int) -> None:
        self.p = space.p
        self.factor = 1.0 + space.alpha
        self.size = degree + 1
        self.f0 = f.coefficient(0)
        rule = disc_rule(space.quadrature, space.alpha)
        a = shift_matrix(f, degree)
        k = np.arange(a.shape[0])
        # Phi[j, k] = k z_j^(k-1): derivative of chi_k at node j
        phi = k[None, :] * np.power(rule.points[:, None], np.maximum(k - 1, 0)[None, :])
        self.b = phi @ a
        self.weights = rule.weights

    def split(self, x: NDArray[np.float64]) -> NDArray[np.complex128]:
        return x[: self.size] + 1j * x[self.size :]

    def __call__(self, x: NDArray[np.float64]) -> tuple[float, NDArray[np.float64]]:
        c = self.split(x)
        w = self.b @ c
        h0 = self.f0 * c[0] - 1.0
        integral = float(np.sum(self.weights * np.abs(w) ** self.p))
        value = abs(h0) ** self.p + self.factor * integral
        pulled = self.b.conj().T @ (self.weights * _signed_power(w, self.p))
        grad = self.p * self.factor * pulled
        grad[0] += self.p * np.conj(self.f0) * _signed_power(np.array([h0]), self.p)[0]
        return value, np.concatenate([grad.real, grad.imag])

    def hessian(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        """Real Hessian from per-node 2x2 blocks s (I + (p - 2) w_hat w_hat^T)."""
        c = self.split(x)
        n = self.size
        bu = np.hstack([self.b.real, -self.b.imag])
        bv = np.hstack([self.b.imag, self.b.real])
        total = self.factor * _block_form(bu, bv, self.b @ c, self.weights, self.p)
        e = np.zeros((1, 2 * n))
        e[0, 0], e[0, n] = self.f0.real, -self.f0.imag
        ev = np.zeros((1, 2 * n))
        ev[0, 0], ev[0, n] = self.f0.imag, self.f0.real
        h0 = np.array([self.f0 * c[0] - 1.0])
        return total + _block_form(e, ev, h0, np.ones(1), self.p)


def _block_form(
    ru: NDArray[np.float64],
    rv: NDArray[np.float64],
    w: NDArray[np.complex128],
    weights: NDArray[np.float64],
    p: float,
) -> NDArray[np.float64]:
    modulus = np.abs(w)
    live = modulus > 0.0
    safe = np.where(live, modulus, 1.0)
    s = np.where(live, weights * p * safe ** (p - 2.0), 0.0)
    s2 = np.where(live, weights * p * (p - 2.0) * safe ** (p - 4.0), 0.0)
    u, v = w.real, w.imag
    a, off, d = s + s2 * u * u, s2 * u * v, s + s2 * v * v
    cross = ru.T @ (off[:, None] * rv)
    return ru.T @ (a[:, None] * ru) + cross + cross.T + rv.T @ (d[:, None] * rv)


def opa_descent(
    space: BesovDirichlet,
    f: Poly,
    degree: int,
    params: DescentParams | None = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> ApproximantResult:
    """Approximate minimizer of ||p f - 1|| in D_alpha^p over deg p <= ``degree``.

    Raises:
        PreconditionError: if f is zero or p <= 1
        NonConvergenceError: if the gradient stays above tolerance after all restarts
    """
    settings = params or DescentParams()
    if f.is_zero:
        raise PreconditionError("Approximants need a nonzero function f")
    if not space.p > 1:
        raise PreconditionError(f"Convex descent needs p > 1, got {space.p}")
    if space.exploratory:
        logger.warning(f"{space.label} lies outside the standing band ({space.regime})")

    objective = _Objective(space, f, degree)
    if settings.warm_start:
        hilbert = BesovDirichlet(2.0, space.alpha, quadrature=space.quadrature)
        start = opa(hilbert, f, degree, tolerances).coefficients.padded(degree + 1)
    else:
        start = np.zeros(degree + 1, dtype=complex)
    x = np.concatenate([start.real, start.imag])

    value, grad = objective(x)
    for attempt in range(settings.restarts + 1):
        target = tolerances.descent_gradient * max(1.0, value)
        if float(np.max(np.abs(grad))) <= target:
            break
        result = optimize.minimize(
            objective,
            x,
            jac=True,
            method="BFGS",
            options={"gtol": target, "maxiter": settings.max_iterations},
        )
        x = np.asarray(result.x, dtype=float)
        value, grad = objective(x)
        logger.debug(
            f"Descent attempt {attempt}: F={value:.12g}, |grad|={np.max(np.abs(grad)):.2e}, "
            f"{result.nit} iterations"
        )
    x, value, grad = _newton_polish(objective, x, tolerances.descent_gradient)
    gradient_norm = float(np.max(np.abs(grad)))
    if gradient_norm > tolerances.descent_gradient * max(1.0, value):
        raise NonConvergenceError(
            f"Descent stopped with gradient {gradient_norm:.3e} "
            f"after {settings.restarts + 1} attempts"
        )

    coeffs = objective.split(x)
    p_poly = Poly.from_array(coeffs)
    residual = p_poly * f - 1.0
    return ApproximantResult(
        degree=degree,
        coefficients=p_poly,
        distance=float(max(value, 0.0) ** (1.0 / space.p)),
        residual_poly=residual,
    )


def _newton_polish(
    objective: _Objective, x: NDArray[np.float64], tolerance: float, steps: int = 20
) -> tuple[NDArray[np.float64], float, NDArray[np.float64]]:
    """Damped Newton steps until the gradient meets the tolerance or stops improving."""
    value, grad = objective(x)
    for _ in range(steps):
        if float(np.max(np.abs(grad))) <= tolerance * max(1.0, value):
            break
        hess = objective.hessian(x)
        step = -np.linalg.lstsq(hess, grad, rcond=None)[0]
        t = 1.0
        while t > 1e-10:
            trial = x + t * step
            trial_value, trial_grad = objective(trial)
            if trial_value <= value + 1e-15 * max(1.0, value):
                break
            t *= 0.5
        else:
            break
        if np.max(np.abs(trial_grad)) >= np.max(np.abs(grad)) and trial_value >= value:
            break
        x, value, grad = trial, trial_value, trial_grad
    return x, value, grad
