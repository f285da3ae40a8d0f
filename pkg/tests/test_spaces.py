# this_file: tests/test_spaces.py
"""Tests for the function spaces, Gram matrices, kernels and D(mu) tools."""

import math
from dataclasses import replace

import numpy as np
import pytest

from cyclab.errors import NonHilbertSpaceError, PreconditionError
from cyclab.polyrat import Poly
from cyclab.spaces import (
    BesovDirichlet,
    DeBrangesRovnyak,
    GramMatrix,
    Hardy,
    HarmonicDirichlet,
    MeasureAtoms,
    QuadratureSpec,
    WeightedDirichlet,
    algebra_norm_estimate,
    besov_regime,
    energy_identity_check,
    inner,
    integrate_disc,
    kernel,
    local_dirichlet,
    monomial_gram,
    norm,
    space_from_dict,
    standing_assumption_ok,
    u_mu,
)
from cyclab.utils import generalized_max_eigenvalue


class TestGram:
    """Test monomial Gram matrices in each space."""

    def test_hardy_identity(self, hardy):
        gram = monomial_gram(hardy, 8)
        assert gram.size == 9
        assert np.allclose(gram.entries, np.eye(9))
        assert gram.is_psd()
        assert gram.condition_number == pytest.approx(1.0)
        assert gram.basis_labels[3] == "z^3"

    def test_dirichlet_diagonal(self, dirichlet):
        diagonal = np.real(np.diag(monomial_gram(dirichlet, 5).entries))
        assert np.allclose(diagonal, [1, 1, 2, 3, 4, 5])

    def test_weighted_dirichlet_diagonal(self):
        diagonal = np.real(np.diag(monomial_gram(WeightedDirichlet(1.0), 4).entries))
        expected = [1.0] + [2.0 * n / (n + 1.0) for n in range(1, 5)]
        assert np.allclose(diagonal, expected)

    def test_hb_monomial_norms(self, hb):
        gram = monomial_gram(hb, 200)
        diagonal = np.real(np.diag(gram.entries))
        assert np.allclose(diagonal, 4.0 * np.arange(201) + 2.0, rtol=1e-10)
        assert gram.is_psd()

    @pytest.mark.parametrize("n_max", [4, 16, 64])
    def test_hz_norm_is_equivalent_to_hardy(self, hz, hardy, n_max):
        form = monomial_gram(hz, n_max).entries
        identity = monomial_gram(hardy, n_max).entries
        largest = generalized_max_eigenvalue(form, identity)
        smallest = -generalized_max_eigenvalue(-form, identity)
        assert 1.0 - 1e-9 <= smallest <= largest <= 4.0 / 3.0 + 1e-9

    def test_harmonic_dirac_diagonal(self, dirac_at_one):
        gram = monomial_gram(HarmonicDirichlet(dirac_at_one), 6)
        assert np.allclose(np.real(np.diag(gram.entries)), 1.0 + np.arange(7))
        assert gram.is_psd()

    def test_besov_non_hilbert(self):
        with pytest.raises(NonHilbertSpaceError):
            monomial_gram(BesovDirichlet(3.0, 1.5), 4)

    def test_gram_must_be_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            GramMatrix(np.array([[1.0, 1.0], [0.0, 1.0]]), ("z^0", "z^1"))

    def test_gram_labels_must_match(self):
        with pytest.raises(ValueError, match="basis labels"):
            GramMatrix(np.eye(2), ("z^0",))


class TestNorms:
    """Test inner products and norms."""

    def test_hardy_inner(self, hardy):
        assert inner(hardy, Poly((1.0, 1.0)), Poly.constant(1.0)) == pytest.approx(1.0)
        assert norm(hardy, Poly((3.0, 4.0))) == pytest.approx(5.0)

    def test_inner_is_conjugate_linear_in_second_argument(self, dirichlet):
        f = Poly((1.0, 2.0))
        g = Poly((0.0, 1.0))
        assert inner(dirichlet, f, g.scaled(1j)) == pytest.approx(-1j * inner(dirichlet, f, g))

    def test_hb_norm_of_constant(self, hb):
        # ||1||^2 = 1 + |c_0|^2 = 2
        assert norm(hb, Poly.constant(1.0)) == pytest.approx(math.sqrt(2.0))

    def test_besov_quadrature_norm(self):
        space = BesovDirichlet(3.0, 0.0)
        assert norm(space, Poly((0.0, 1.0))) == pytest.approx(1.0, rel=1e-9)

    @pytest.mark.parametrize(
        ("p", "alpha", "scheme"),
        [(1.5, 0.0, "gauss-legendre"), (2.5, 0.5, "gauss-jacobi"), (3.0, 1.0, "gauss-jacobi")],
    )
    def test_besov_norm_stable_under_node_doubling(self, p, alpha, scheme):
        space = BesovDirichlet(p, alpha, quadrature=QuadratureSpec(64, 128, scheme))
        finer = replace(space, quadrature=space.quadrature.doubled())
        for f in (Poly((1.0, -1.0)), Poly((0.0, 1.0, 0.25)), Poly((2.0, 0.5j, 0.0, -0.1))):
            coarse = norm(space, f, check=False)
            assert norm(finer, f, check=False) == pytest.approx(coarse, rel=1e-6)

    def test_besov_has_no_inner_product(self):
        with pytest.raises(NonHilbertSpaceError):
            inner(BesovDirichlet(3.0, 1.5), Poly.constant(1.0), Poly.constant(1.0))

    def test_algebra_norm_on_hardy_is_sup(self, hardy):
        estimate = algebra_norm_estimate(hardy, Poly((1.0, 1.0)))
        assert estimate.kind == "exact"
        assert estimate.value == pytest.approx(2.0)

    def test_algebra_norm_elsewhere_is_equivalent(self, dirichlet):
        estimate = algebra_norm_estimate(dirichlet, Poly((0.0, 1.0)))
        assert estimate.kind == "equivalent"
        assert estimate.value == pytest.approx(2.0)


class TestRegimes:
    """Test the Besov parameter classification."""

    @pytest.mark.parametrize(
        ("p", "alpha", "regime"),
        [
            (2.0, 0.0, "standing"),
            (3.0, 1.5, "standing"),
            (1.5, 1.0, "outer-cyclic"),
            (3.0, 0.0, "algebra-invertible-only"),
        ],
    )
    def test_besov_regime(self, p, alpha, regime):
        assert besov_regime(p, alpha) == regime

    def test_standing_assumption(self):
        assert standing_assumption_ok(Hardy())
        assert not standing_assumption_ok(BesovDirichlet(3.0, 0.0))

    def test_invalid_parameters(self):
        with pytest.raises(ValueError, match="exceed 1"):
            BesovDirichlet(1.0, 0.0)
        with pytest.raises(ValueError, match="exceed -1"):
            WeightedDirichlet(-1.0)


class TestSpaceFromDict:
    """Test building spaces from manifest mappings."""

    def test_hardy(self):
        assert isinstance(space_from_dict({"kind": "hardy"}), Hardy)

    def test_de_branges_rovnyak(self):
        space = space_from_dict(
            {"kind": "de-branges-rovnyak", "params": {"b": [0.5, 0.5], "n_max": 16}}
        )
        assert isinstance(space, DeBrangesRovnyak)
        assert space.mate.N == 1

    def test_quadrature_is_read(self):
        space = space_from_dict(
            {
                "kind": "weighted-dirichlet",
                "params": {"alpha": 0.5},
                "quadrature": {"radial_nodes": 32},
            }
        )
        assert space.quadrature.radial_nodes == 32
        assert space.to_dict()["params"] == {"alpha": 0.5}

    def test_missing_symbol(self):
        with pytest.raises(ValueError, match="symbol"):
            space_from_dict({"kind": "de-branges-rovnyak", "params": {}})

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="Unknown space kind"):
            space_from_dict({"kind": "bergman"})


class TestKernels:
    """Test reproducing kernels."""

    def test_hardy_kernel(self, hardy):
        assert kernel(hardy, 0.5, 0.5) == pytest.approx(4.0 / 3.0)

    def test_dirichlet_kernel(self, dirichlet):
        # 1 + sum_{n >= 1} x^n / n = 1 - log(1 - x)
        assert kernel(dirichlet, 0.5, 0.5) == pytest.approx(1.0 - math.log(0.75))

    def test_hb_kernel_diagonal_is_positive(self, hb):
        value = kernel(hb, 0.3 + 0.2j, 0.3 + 0.2j)
        assert value.real > 0
        assert abs(value.imag) <= 1e-12

    def test_kernel_needs_open_disc(self, hardy):
        with pytest.raises(PreconditionError, match="open disc"):
            kernel(hardy, 1.0, 0.0)


class TestQuadrature:
    """Test disc quadrature under the normalized area measure."""

    def test_area_is_one(self):
        value, converged = integrate_disc(
            lambda z: np.ones_like(z, dtype=float), QuadratureSpec()
        )
        assert value == pytest.approx(1.0)
        assert converged

    def test_second_moment(self):
        value, _ = integrate_disc(lambda z: np.abs(z) ** 2, QuadratureSpec(), tolerance=1e-10)
        assert value == pytest.approx(0.5)

    def test_invalid_spec(self):
        with pytest.raises(ValueError, match="Unknown quadrature scheme"):
            QuadratureSpec(scheme="simpson")


class TestHarmonicDirichlet:
    """Test measures, local Dirichlet integrals and the energy identity."""

    def test_atoms_validation(self):
        with pytest.raises(ValueError, match="closed disc"):
            MeasureAtoms(((2.0, 1.0),))
        with pytest.raises(ValueError, match="positive"):
            MeasureAtoms(((0.5, 0.0),))
        with pytest.raises(ValueError, match="at least one atom"):
            MeasureAtoms(())

    def test_atoms_json(self):
        atoms = MeasureAtoms.from_json([[[0.0, 1.0], 0.5], [0.25, 2.0]])
        assert atoms.total_mass == pytest.approx(2.5)
        assert len(atoms.boundary) == 1
        assert atoms.singular_radii() == pytest.approx([0.25, 1.0])

    def test_local_dirichlet_of_monomials(self):
        for n in range(6):
            assert local_dirichlet(Poly.monomial(n), 1.0) == pytest.approx(float(n))

    def test_u_mu_of_dirac_is_poisson(self, dirac_at_one):
        assert u_mu(dirac_at_one, 0.0) == pytest.approx(1.0)
        assert u_mu(dirac_at_one, -0.5) == pytest.approx(0.75 / 2.25)

    def test_u_mu_needs_open_disc(self, dirac_at_one):
        with pytest.raises(PreconditionError):
            u_mu(dirac_at_one, 1.0)

    def test_energy_identity_boundary_atom(self, dirac_at_one):
        identity = energy_identity_check(dirac_at_one, Poly((0.0, 1.0, 1.0)))
        assert identity.rhs == pytest.approx(5.0)
        assert identity.relative_gap <= 1e-4

    def test_energy_identity_interior_atom(self):
        atoms = MeasureAtoms.point_mass(0.5, 2.0)
        identity = energy_identity_check(atoms, Poly((1.0, 1.0)))
        assert identity.rhs == pytest.approx(2.0)
        assert identity.relative_gap <= 1e-4

    def test_energy_identity_constant(self, dirac_at_one):
        identity = energy_identity_check(dirac_at_one, Poly.constant(3.0))
        assert identity.lhs == 0.0
        assert identity.relative_gap == 0.0
