# this_file: src/cyclab/polyrat/series.py
"""Synthetic division and truncated power series of rational functions."""

import numpy as np
from scipy import signal

from ..errors import SeriesError
from .poly import ComplexArray, Poly, Rat


def synth_div(g: Poly, w: complex) -> tuple[Poly, complex]:
    """Divide ``g`` by (z - w): returns (q, r) with g = (z - w) q + r and r = g(w).

    Args:
        g: Dividend
        w: Root of the linear divisor

    Returns:
        Quotient polynomial of degree deg(g) - 1 and the remainder g(w)
    """
    coeffs = g.coeffs
    n = len(coeffs) - 1
    if n < 1:
        return Poly.zero(), (coeffs[0] if coeffs else 0j)
    quotient = [0j] * n
    acc = coeffs[n]
    for k in range(n - 1, -1, -1):
        quotient[k] = acc
        acc = coeffs[k] + w * acc
    return Poly(tuple(quotient)), complex(acc)


def _as_rat(f: Rat | Poly) -> Rat:
    return f if isinstance(f, Rat) else Rat.from_poly(f)


def series_div(b: Rat | Poly, a: Rat | Poly, length: int) -> ComplexArray:
    """First ``length`` Taylor coefficients of b/a at the origin.

    The quotient (b.num * a.den) / (b.den * a.num) is expanded by running the
    recursion of the denominator as a linear filter on a unit impulse.

    Raises:
        SeriesError: if a(0) = 0 or b has a pole at the origin
    """
    if length < 0:
        raise ValueError(f"Series length must be nonnegative, got {length}")
    rb, ra = _as_rat(b), _as_rat(a)
    top = rb.num * ra.den
    bottom = rb.den * ra.num
    if bottom.is_zero or abs(bottom.coefficient(0)) <= 1e-300:
        if abs(ra.num.coefficient(0)) <= 1e-300:
            raise SeriesError("Series division needs a(0) != 0")
        raise SeriesError("Series division needs b holomorphic at 0")
    if length == 0:
        return np.zeros(0, dtype=complex)
    if top.is_zero:
        return np.zeros(length, dtype=complex)
    impulse = np.zeros(length, dtype=complex)
    impulse[0] = 1.0
    return np.asarray(signal.lfilter(top.array, bottom.array, impulse), dtype=complex)


def taylor(f: Rat | Poly, length: int) -> ComplexArray:
    """Taylor coefficients of a rational function (or a padded/truncated polynomial)."""
    if isinstance(f, Poly):
        out = np.zeros(length, dtype=complex)
        take = min(length, len(f.coeffs))
        out[:take] = f.coeffs[:take]
        return out
    return series_div(f.num, Rat.from_poly(f.den), length)


def series_residual(c: ComplexArray, b: Rat | Poly, a: Rat | Poly) -> float:
    """Max coefficientwise |(c * series(a)) - series(b)| over the truncation window."""
    length = len(c)
    if length == 0:
        return 0.0
    product = np.convolve(c, taylor(a, length))[:length]
    return float(np.max(np.abs(product - taylor(b, length))))
