# this_file: src/cyclab/spaces/__init__.py
"""Function spaces on the disc: Gram matrices, norms, kernels and D(mu) tools."""

from .dirichlet import (
    EnergyIdentity,
    MeasureAtoms,
    energy_identity_check,
    local_dirichlet,
    local_dirichlet_gram,
    multiplier_surrogate_bound,
    quotient_matrix,
    u_mu,
    u_mu_values,
)
from .gram import (
    GramMatrix,
    NormEstimate,
    algebra_norm_estimate,
    hermitian_form,
    inner,
    monomial_gram,
    norm,
)
from .kernels import KERNEL_DEGREE, kernel
from .quadrature import (
    DiscRule,
    QuadratureSpec,
    disc_rule,
    integrate_disc,
    radial_rule,
    ring_adaptive_integral,
    ring_node_count,
)
from .spec import (
    SPACE_KINDS,
    BesovDirichlet,
    DeBrangesRovnyak,
    Hardy,
    HarmonicDirichlet,
    SpaceSpec,
    WeightedDirichlet,
    besov_regime,
    dirichlet_weights,
    space_from_dict,
    standing_assumption_ok,
)

__all__ = [
    "KERNEL_DEGREE",
    "SPACE_KINDS",
    "BesovDirichlet",
    "DeBrangesRovnyak",
    "DiscRule",
    "EnergyIdentity",
    "GramMatrix",
    "Hardy",
    "HarmonicDirichlet",
    "MeasureAtoms",
    "NormEstimate",
    "QuadratureSpec",
    "SpaceSpec",
    "WeightedDirichlet",
    "algebra_norm_estimate",
    "besov_regime",
    "dirichlet_weights",
    "disc_rule",
    "energy_identity_check",
    "hermitian_form",
    "inner",
    "integrate_disc",
    "kernel",
    "local_dirichlet",
    "local_dirichlet_gram",
    "monomial_gram",
    "multiplier_surrogate_bound",
    "norm",
    "quotient_matrix",
    "radial_rule",
    "ring_adaptive_integral",
    "ring_node_count",
    "space_from_dict",
    "standing_assumption_ok",
    "u_mu",
    "u_mu_values",
]
