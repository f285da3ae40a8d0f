# this_file: src/cyclab/polyrat/poly.py
"""Complex polynomials, rational functions and Hermitian trigonometric polynomials."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any, Self, overload

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..errors import PoleError

ComplexArray = NDArray[np.complex128]


def _as_complex_tuple(values: Iterable[Any]) -> tuple[complex, ...]:
    out = tuple(complex(v) for v in values)
    for v in out:
        if not (np.isfinite(v.real) and np.isfinite(v.imag)):
            raise ValueError(f"Coefficients must be finite, got {v}")
    return out


@dataclass(frozen=True)
class Poly:
    """Polynomial sum_k coeffs[k] z^k.

    Trailing zero coefficients are stripped on construction, so the zero polynomial is
    the empty tuple and ``degree`` is -1 for it.
    """

    coeffs: tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        values = _as_complex_tuple(self.coeffs)
        end = len(values)
        while end and values[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", values[:end])

    @classmethod
    def zero(cls) -> Self:
        return cls(())

    @classmethod
    def constant(cls, value: complex) -> Self:
        return cls((value,))

    @classmethod
    def monomial(cls, n: int, scale: complex = 1.0) -> Self:
        """The monomial scale * z^n (chi_n when scale is 1)."""
        if n < 0:
            raise ValueError(f"Monomial index must be nonnegative, got {n}")
        return cls((0.0,) * n + (scale,))

    @classmethod
    def from_array(cls, values: ArrayLike) -> Self:
        return cls(tuple(np.asarray(values, dtype=complex).ravel()))

    @classmethod
    def from_roots(cls, roots: Sequence[complex], leading: complex = 1.0) -> Self:
        """Build leading * prod (z - r)."""
        coeffs = np.array([leading], dtype=complex)
        for r in roots:
            coeffs = np.convolve(coeffs, np.array([-r, 1.0], dtype=complex))
        return cls.from_array(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def array(self) -> ComplexArray:
        return np.array(self.coeffs, dtype=complex)

    def padded(self, length: int) -> ComplexArray:
        """Coefficient vector zero-padded (never truncated) to ``length``."""
        if length < len(self.coeffs):
            raise ValueError(f"Cannot pad degree {self.degree} polynomial to length {length}")
        out = np.zeros(length, dtype=complex)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def coefficient(self, k: int) -> complex:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0j

    @overload
    def __call__(self, z: complex) -> complex: ...

    @overload
    def __call__(self, z: NDArray[Any]) -> ComplexArray: ...

    def __call__(self, z: complex | NDArray[Any]) -> complex | ComplexArray:
        """Horner evaluation, vectorized over arrays."""
        points = np.asarray(z, dtype=complex)
        result = np.zeros_like(points)
        for c in reversed(self.coeffs):
            result = result * points + c
        if result.ndim == 0:
            return complex(result)
        return result

    def derivative(self) -> "Poly":
        if self.degree < 1:
            return Poly.zero()
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def trim(self, tol: float) -> "Poly":
        """Drop trailing coefficients with modulus at or below ``tol`` times the largest one."""
        if self.is_zero:
            return self
        values = list(self.coeffs)
        scale = max(abs(c) for c in values)
        while values and abs(values[-1]) <= tol * scale:
            values.pop()
        return Poly(tuple(values))

    def scaled(self, factor: complex) -> "Poly":
        return Poly(tuple(factor * c for c in self.coeffs))

    def allclose(self, other: "Poly", tol: float = 1e-12) -> bool:
        length = max(len(self.coeffs), len(other.coeffs), 1)
        return bool(np.max(np.abs(self.padded(length) - other.padded(length))) <= tol)

    def l2_norm(self) -> float:
        """Coefficient l2 norm, i.e. the H^2 norm."""
        return float(np.linalg.norm(self.array)) if self.coeffs else 0.0

    def __add__(self, other: "Poly | complex") -> "Poly":
        rhs = other if isinstance(other, Poly) else Poly.constant(other)
        length = max(len(self.coeffs), len(rhs.coeffs))
        return Poly.from_array(self.padded(length) + rhs.padded(length))

    def __radd__(self, other: complex) -> "Poly":
        return self + other

    def __neg__(self) -> "Poly":
        return self.scaled(-1.0)

    def __sub__(self, other: "Poly | complex") -> "Poly":
        rhs = other if isinstance(other, Poly) else Poly.constant(other)
        return self + (-rhs)

    def __rsub__(self, other: complex) -> "Poly":
        return Poly.constant(other) - self

    def __mul__(self, other: "Poly | complex") -> "Poly":
        if not isinstance(other, Poly):
            return self.scaled(other)
        if self.is_zero or other.is_zero:
            return Poly.zero()
        return Poly.from_array(np.convolve(self.array, other.array))

    def __rmul__(self, other: complex) -> "Poly":
        return self.scaled(other)

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError(f"Polynomial powers must be nonnegative, got {exponent}")
        result = Poly.constant(1.0)
        for _ in range(exponent):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"Poly({[complex(c) for c in self.coeffs]})"

    def to_json(self) -> list[list[float]]:
        return [[c.real, c.imag] for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[Any]) -> Self:
        values: list[complex] = []
        for item in data:
            if isinstance(item, list | tuple):
                if len(item) != 2:
                    raise ValueError(f"Complex coefficient must be a [re, im] pair, got {item}")
                values.append(complex(float(item[0]), float(item[1])))
            else:
                values.append(complex(float(item)))
        return cls(tuple(values))


@dataclass(frozen=True)
class Rat:
    """Rational function num / den."""

    num: Poly
    den: Poly = Poly((1.0,))

    def __post_init__(self) -> None:
        if self.den.is_zero:
            raise ValueError("Denominator must not be the zero polynomial")

    @classmethod
    def from_poly(cls, p: Poly) -> Self:
        return cls(p, Poly.constant(1.0))

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @overload
    def __call__(self, z: complex, pole_tol: float = ...) -> complex: ...

    @overload
    def __call__(self, z: NDArray[Any], pole_tol: float = ...) -> ComplexArray: ...

    def __call__(
        self, z: complex | NDArray[Any], pole_tol: float = 1e-14
    ) -> complex | ComplexArray:
        points = np.asarray(z, dtype=complex)
        d = np.asarray(self.den(points))
        bad = np.abs(d) <= pole_tol * max(1.0, self.den.l2_norm())
        if np.any(bad):
            where = complex(points[bad].ravel()[0]) if points.ndim else complex(points)
            raise PoleError(f"Denominator vanishes at z={where}")
        result = np.asarray(self.num(points)) / d
        if result.ndim == 0:
            return complex(result)
        return result

    def derivative(self) -> "Rat":
        """(num' den - num den') / den^2."""
        top = self.num.derivative() * self.den - self.num * self.den.derivative()
        return Rat(top, self.den * self.den)

    def __mul__(self, other: "Rat | Poly | complex") -> "Rat":
        if isinstance(other, Rat):
            return Rat(self.num * other.num, self.den * other.den)
        if isinstance(other, Poly):
            return Rat(self.num * other, self.den)
        return Rat(self.num.scaled(other), self.den)

    def __truediv__(self, other: "Rat | Poly") -> "Rat":
        if isinstance(other, Poly):
            other = Rat.from_poly(other)
        if other.num.is_zero:
            raise ZeroDivisionError("Division by the zero rational function")
        return Rat(self.num * other.den, self.den * other.num)

    def __repr__(self) -> str:
        return f"Rat(num={self.num!r}, den={self.den!r})"

    def to_json(self) -> dict[str, list[list[float]]]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        if "num" not in data:
            raise ValueError("Rational needs a 'num' entry")
        den = Poly.from_json(data["den"]) if "den" in data else Poly.constant(1.0)
        return cls(Poly.from_json(data["num"]), den)


def evaluate(f: Poly | Rat, z: complex) -> complex:
    """Evaluate a polynomial or rational function at a single point."""
    return f(complex(z))


@dataclass(frozen=True)
class TrigPoly:
    """Real-valued trigonometric polynomial sum_{k=-n}^{n} c_k e^{ik theta}.

    ``coeffs`` holds c_{-n}, ..., c_n, so ``coeffs[n + k]`` is c_k.
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        values = _as_complex_tuple(self.coeffs)
        if len(values) % 2 != 1:
            raise ValueError(
                f"Trig polynomial needs an odd number of coefficients, got {len(values)}"
            )
        arr = np.array(values, dtype=complex)
        scale = max(1.0, float(np.max(np.abs(arr))))
        if np.max(np.abs(arr - np.conj(arr[::-1]))) > 1e-12 * scale:
            raise ValueError("Trig polynomial coefficients must satisfy c[-k] = conj(c[k])")
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def constant(cls, value: float) -> Self:
        return cls((complex(value),))

    @classmethod
    def from_poly_modulus(cls, q: Poly) -> Self:
        """Coefficients of |q(e^{i theta})|^2."""
        if q.is_zero:
            return cls((0j,))
        arr = q.array
        prod = np.convolve(arr, np.conj(arr[::-1]))
        prod = 0.5 * (prod + np.conj(prod[::-1]))
        return cls(tuple(prod))

    @property
    def degree(self) -> int:
        return (len(self.coeffs) - 1) // 2

    @property
    def array(self) -> ComplexArray:
        return np.array(self.coeffs, dtype=complex)

    def coefficient(self, k: int) -> complex:
        n = self.degree
        return self.coeffs[n + k] if -n <= k <= n else 0j

    def __call__(self, theta: ArrayLike) -> NDArray[np.float64]:
        angles = np.asarray(theta, dtype=float)
        n = self.degree
        w = np.exp(1j * angles)
        # z^{-n} * (Laurent polynomial as an ordinary polynomial in z)
        total = np.zeros_like(w)
        for c in reversed(self.coeffs):
            total = total * w + c
        return np.real(total * w ** (-n))

    def padded(self, degree: int) -> ComplexArray:
        if degree < self.degree:
            raise ValueError(f"Cannot pad degree {self.degree} trig polynomial to {degree}")
        out = np.zeros(2 * degree + 1, dtype=complex)
        offset = degree - self.degree
        out[offset : offset + len(self.coeffs)] = self.coeffs
        return out

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        n = max(self.degree, other.degree)
        return TrigPoly(tuple(self.padded(n) + other.padded(n)))

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        n = max(self.degree, other.degree)
        return TrigPoly(tuple(self.padded(n) - other.padded(n)))

    def scaled(self, factor: float) -> "TrigPoly":
        return TrigPoly(tuple(float(factor) * c for c in self.coeffs))

    def trimmed(self, tol: float) -> "TrigPoly":
        """Drop outermost coefficient pairs whose modulus is at most ``tol`` times the peak."""
        arr = self.array
        scale = float(np.max(np.abs(arr))) if arr.size else 0.0
        n = self.degree
        while n > 0 and abs(arr[self.degree + n]) <= tol * scale:
            n -= 1
        center = self.degree
        return TrigPoly(tuple(arr[center - n : center + n + 1]))

    def laurent_numerator(self) -> Poly:
        """The ordinary polynomial z^n t(z) of degree 2n."""
        return Poly.from_array(self.array)
