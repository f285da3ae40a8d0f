# this_file: tests/test_approximants.py
"""Tests for optimal polynomial approximants, scans and point evaluations."""

import math

import numpy as np
import pytest

from cyclab.approximants import (
    DescentParams,
    approximant_distances,
    bpe_estimate,
    cyclicity_scan,
    default_schedule,
    dist_to_span,
    duality_check,
    fit_decay,
    invertible_reach,
    opa,
    opa_descent,
    plateau_verdict,
    power_membership_trend,
    product_trend,
    shift_matrix,
)
from cyclab.errors import NonHilbertSpaceError, PreconditionError
from cyclab.polyrat import Poly
from cyclab.spaces import BesovDirichlet, WeightedDirichlet

ONE_MINUS_Z = Poly((1.0, -1.0))


class TestOpa:
    """Test the normal-equation approximants."""

    def test_hardy_closed_form(self, hardy):
        for n in range(21):
            result = opa(hardy, ONE_MINUS_Z, n)
            assert result.distance**2 == pytest.approx(1.0 / (n + 2), rel=1e-9)

    def test_degree_four(self, hardy):
        assert opa(hardy, ONE_MINUS_Z, 4).distance ** 2 == pytest.approx(1.0 / 6.0, abs=1e-9)

    def test_invertible_constant(self, dirichlet):
        result = opa(dirichlet, Poly.constant(2.0), 3)
        assert result.distance == pytest.approx(0.0, abs=1e-12)
        assert result.coefficients.allclose(Poly.constant(0.5), 1e-12)

    def test_residual_matches_distance(self, dirichlet):
        result = opa(dirichlet, ONE_MINUS_Z, 5)
        residual = result.coefficients * ONE_MINUS_Z - 1.0
        assert residual.allclose(result.residual_poly, 1e-10)

    def test_distances_from_one_factorization(self, dirichlet):
        distances = approximant_distances(dirichlet, ONE_MINUS_Z, 10)
        expected = [opa(dirichlet, ONE_MINUS_Z, n).distance for n in range(11)]
        assert np.allclose(distances, expected, rtol=1e-8)

    def test_distances_decrease(self, dirichlet):
        distances = approximant_distances(dirichlet, ONE_MINUS_Z, 32)
        assert np.all(np.diff(distances) <= 1e-12)

    @pytest.mark.parametrize("c", [3.0, 0.5j, -2.0 + 1.0j])
    @pytest.mark.parametrize("f", [ONE_MINUS_Z, Poly((2.0, -1.0, 0.5))])
    def test_scaling_covariance(self, dirichlet, f, c):
        base = opa(dirichlet, f, 8)
        scaled = opa(dirichlet, f.scaled(c), 8)
        assert scaled.distance == pytest.approx(base.distance, rel=1e-9)
        expected = base.coefficients.scaled(1.0 / c)
        assert scaled.coefficients.allclose(expected, 1e-9 * expected.l2_norm())

    @pytest.mark.parametrize("f", [ONE_MINUS_Z, Poly((2.0, -1.0)), Poly((1.0, 0.0, -1.0))])
    def test_hz_distances_track_hardy(self, hz, hardy, f):
        ratios = approximant_distances(hz, f, 64) / approximant_distances(hardy, f, 64)
        assert np.all(ratios >= 1.0 - 1e-9)
        assert np.all(ratios <= math.sqrt(4.0 / 3.0) + 1e-9)

    def test_dist_to_span(self, hardy):
        z = Poly.monomial(1)
        assert dist_to_span(hardy, z, Poly.constant(1.0), 0) == pytest.approx(1.0)
        assert dist_to_span(hardy, z, Poly.constant(1.0), 1) == pytest.approx(0.0, abs=1e-12)

    def test_shift_matrix(self):
        a = shift_matrix(Poly((1.0, 2.0)), 2)
        assert a.shape == (4, 3)
        assert np.allclose(a[:, 2], [0, 0, 1, 2])

    def test_zero_function_rejected(self, hardy):
        with pytest.raises(PreconditionError, match="nonzero"):
            opa(hardy, Poly.zero(), 2)

    def test_besov_needs_descent(self):
        with pytest.raises(NonHilbertSpaceError, match="opa_descent"):
            opa(BesovDirichlet(3.0, 1.5), ONE_MINUS_Z, 2)


class TestDescent:
    """Test the convex descent for Besov spaces."""

    def test_matches_normal_equations_at_p_two(self):
        f = Poly((2.0, -1.0))
        expected = opa(WeightedDirichlet(0.0), f, 3).distance
        result = opa_descent(BesovDirichlet(2.0, 0.0), f, 3)
        assert result.distance == pytest.approx(expected, rel=1e-6)

    def test_improves_with_degree(self):
        space = BesovDirichlet(3.0, 1.5)
        f = Poly((2.0, -1.0))
        low = opa_descent(space, f, 0, DescentParams(max_iterations=500))
        high = opa_descent(space, f, 3, DescentParams(max_iterations=500))
        assert 0.0 <= high.distance <= low.distance + 1e-12

    def test_params_validation(self):
        with pytest.raises(ValueError, match="Iteration cap"):
            DescentParams(max_iterations=0)
        with pytest.raises(ValueError, match="Restarts"):
            DescentParams(restarts=-1)


class TestScan:
    """Test cyclicity scans, decay fits and verdicts."""

    def test_default_schedule(self):
        assert default_schedule(10) == [0, 1, 2, 4, 8, 10]
        assert default_schedule(16) == [0, 1, 2, 4, 8, 16]

    def test_outer_function_decays(self, hardy):
        report = cyclicity_scan(hardy, ONE_MINUS_Z, 64)
        assert report.verdict == "decaying"
        assert report.distance(64) == pytest.approx(1.0 / math.sqrt(66.0))

    def test_inner_factor_plateaus(self, hardy):
        report = cyclicity_scan(hardy, Poly.monomial(1), 32)
        assert report.verdict == "plateau"
        assert report.distance(32) == pytest.approx(1.0)

    def test_threads_do_not_change_results(self, dirichlet):
        single = cyclicity_scan(dirichlet, ONE_MINUS_Z, 32)
        pooled = cyclicity_scan(dirichlet, ONE_MINUS_Z, 32, threads=3)
        assert single.distances == pooled.distances
        assert single.degrees == pooled.degrees

    def test_schedule_out_of_range(self, hardy):
        with pytest.raises(ValueError, match="Schedule"):
            cyclicity_scan(hardy, ONE_MINUS_Z, 8, schedule=[0, 16])

    def test_fit_prefers_power_law(self):
        degrees = [2, 4, 8, 16, 32, 64]
        fit = fit_decay(degrees, [n**-0.5 for n in degrees])
        assert fit.model == "power"
        assert fit.params["beta"] == pytest.approx(0.5)

    def test_fit_ties_go_to_plateau(self):
        degrees = [2, 4, 8, 16, 32]
        assert fit_decay(degrees, [0.3] * len(degrees)).model == "plateau"

    def test_fit_degenerate(self):
        assert fit_decay([0, 1], [1.0, 0.5]).model == "degenerate"

    def test_plateau_verdict(self):
        assert plateau_verdict(0.5, 0.5) == "plateau"
        assert plateau_verdict(1e-5, 1e-5) == "decaying"
        assert plateau_verdict(0.5, 0.7) == "decaying"


class TestBpe:
    """Test bounded point evaluation estimates."""

    def test_hardy_grows_like_square_root(self, hardy):
        report = bpe_estimate(hardy, 1.0, 64)
        assert np.allclose(report.values, np.sqrt(np.arange(1, 66)))
        assert not report.bounded_flag

    def test_dirichlet_grows_logarithmically(self, dirichlet):
        report = bpe_estimate(dirichlet, 1.0, 128)
        harmonic = 1.0 + sum(1.0 / k for k in range(1, 129))
        assert report.value(128) == pytest.approx(math.sqrt(harmonic))
        assert not report.bounded_flag

    def test_hb_evaluation_at_e0_point_is_bounded(self, hb):
        # The kernel at 1 is the constant 1/2, so every v_n equals 1/sqrt(2).
        report = bpe_estimate(hb, 1.0, 256)
        assert np.allclose(report.values, 1.0 / math.sqrt(2.0), rtol=1e-9)
        assert report.bounded_flag

    def test_needs_unimodular_point(self, hardy):
        with pytest.raises(PreconditionError, match="zeta"):
            bpe_estimate(hardy, 0.5, 8)


class TestTrends:
    """Test duality, power and product trends."""

    def test_duality_is_tight_in_hardy(self, hardy):
        check = duality_check(hardy, ONE_MINUS_Z, 1.0, 32)
        assert check.holds()
        assert check.minimum == pytest.approx(1.0)

    @pytest.mark.parametrize("space", ["dirichlet", "hb"])
    def test_duality_bound_beyond_hardy(self, space, request):
        check = duality_check(request.getfixturevalue(space), ONE_MINUS_Z, 1.0, 32)
        assert check.holds()
        assert len(check.products) == 33

    def test_duality_needs_zero(self, hardy):
        with pytest.raises(PreconditionError, match=r"f\(zeta\) = 0"):
            duality_check(hardy, Poly((2.0, -1.0)), 1.0, 8)

    def test_powers_of_a_multiple(self, hardy):
        trend = power_membership_trend(hardy, ONE_MINUS_Z, ONE_MINUS_Z, (1, 2), (0, 1, 2))
        assert trend.nonincreasing()
        assert trend.distances[2][-1] == pytest.approx(0.0, abs=1e-10)

    def test_powers_must_be_positive(self, hardy):
        with pytest.raises(ValueError, match="positive"):
            power_membership_trend(hardy, ONE_MINUS_Z, ONE_MINUS_Z, (0,))

    def test_product_of_outer_functions(self, hardy):
        trend = product_trend(hardy, ONE_MINUS_Z, Poly((1.0, 1.0)), 32)
        assert trend.verdict_product == "decaying"
        assert trend.consistent

    def test_invertible_reach(self, hardy):
        assert invertible_reach(hardy, Poly.constant(2.0)) == 0
        assert invertible_reach(hardy, Poly((1.0, 0.5)), max_degree=4) is None
        assert invertible_reach(hardy, Poly((1.0, 0.5)), max_degree=40) is not None
