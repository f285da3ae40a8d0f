# this_file: src/cyclab/__init__.py
"""cyclab - numerical experiments on cyclic vectors of the shift in spaces of analytic functions."""

try:
    from ._version import __version__
except ImportError:
    __version__ = "0.0.0+unknown"

from .approximants import bpe_estimate, cyclicity_scan, dist_to_span, opa, opa_descent
from .config import DEFAULT_GRID, DEFAULT_TOLERANCES, GridSpec, Tolerances
from .corona import bezout_ls, delta_inf, exponent_sweep
from .errors import CyclabError
from .growth import monomial_growth, multiplier_inequality_check, resolvent_bound_check
from .outerlab import e0_membership, is_outer, outer_from_modulus
from .polyrat import Poly, Rat, TrigPoly, fejer_riesz, mate
from .spaces import (
    BesovDirichlet,
    DeBrangesRovnyak,
    Hardy,
    HarmonicDirichlet,
    MeasureAtoms,
    WeightedDirichlet,
    inner,
    monomial_gram,
    norm,
)

__all__ = [
    "DEFAULT_GRID",
    "DEFAULT_TOLERANCES",
    "BesovDirichlet",
    "CyclabError",
    "DeBrangesRovnyak",
    "GridSpec",
    "Hardy",
    "HarmonicDirichlet",
    "MeasureAtoms",
    "Poly",
    "Rat",
    "Tolerances",
    "TrigPoly",
    "WeightedDirichlet",
    "__version__",
    "bezout_ls",
    "bpe_estimate",
    "cyclicity_scan",
    "delta_inf",
    "dist_to_span",
    "e0_membership",
    "exponent_sweep",
    "fejer_riesz",
    "inner",
    "is_outer",
    "mate",
    "monomial_gram",
    "multiplier_inequality_check",
    "norm",
    "opa",
    "opa_descent",
    "outer_from_modulus",
    "resolvent_bound_check",
]
