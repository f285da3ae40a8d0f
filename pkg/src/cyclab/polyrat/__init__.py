# this_file: src/cyclab/polyrat/__init__.py
"""Polynomials, rational functions, power series and spectral factorization."""

from .circle import sup_circle
from .factorization import (
    RationalMate,
    SpectralFactor,
    cauchy_coefficient_bound,
    corona_exponent_threshold,
    fejer_riesz,
    mate,
    spectral_factor,
)
from .poly import Poly, Rat, TrigPoly, evaluate
from .roots import (
    RootCluster,
    circle_angle,
    circle_clusters,
    cluster_roots,
    poles_in_closed_disc,
    poly_roots,
    unimodular_clusters,
    vanishes_to_order,
)
from .series import series_div, series_residual, synth_div, taylor

__all__ = [
    "Poly",
    "Rat",
    "RationalMate",
    "RootCluster",
    "SpectralFactor",
    "TrigPoly",
    "cauchy_coefficient_bound",
    "circle_angle",
    "circle_clusters",
    "cluster_roots",
    "corona_exponent_threshold",
    "evaluate",
    "fejer_riesz",
    "mate",
    "poles_in_closed_disc",
    "poly_roots",
    "series_div",
    "series_residual",
    "spectral_factor",
    "sup_circle",
    "synth_div",
    "taylor",
    "unimodular_clusters",
    "vanishes_to_order",
]
