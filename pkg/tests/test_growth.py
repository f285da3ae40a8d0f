# this_file: tests/test_growth.py
"""Tests for monomial growth, multiplier lower bounds, power sums and resolvents."""

import math

import numpy as np
import pytest

from cyclab.errors import DivergenceError, NonHilbertSpaceError, PreconditionError
from cyclab.growth import (
    coefficient_growth,
    eulerian_numbers,
    monomial_growth,
    multiplier_inequality_check,
    multiplier_section_sweep,
    power_sum_closed_form,
    power_sum_inequality,
    resolvent_bound_check,
    section_norm,
)
from cyclab.polyrat import Poly
from cyclab.spaces import BesovDirichlet, HarmonicDirichlet

POWER_SUM_X = (0.1, 0.25, 0.5, 0.75, 0.9, 0.99)


class TestMonomialGrowth:
    """Test monomial norms in the designated norm of each space."""

    def test_besov_algebra_norm(self):
        report = monomial_growth(BesovDirichlet(2.0, 0.0), 16)
        n = np.arange(17)
        assert np.allclose(report.values, np.sqrt(1.0 + n))
        assert np.allclose(report.bound_values, np.sqrt(1.0 + n**2))
        assert report.bound_margin == pytest.approx(0.0, abs=1e-12)
        assert report.quantity == "algebra-norm"

    def test_besov_weighted_stays_below_bound(self):
        report = monomial_growth(BesovDirichlet(3.0, 1.5), 32)
        assert report.bound_margin >= -1e-12
        assert report.regime == "standing"

    def test_hb_space_norm(self, hb):
        report = monomial_growth(hb, 64)
        assert np.allclose(report.values, np.sqrt(2.0 + 4.0 * np.arange(65)), rtol=1e-9)
        assert report.bound_margin >= 0
        assert report.extras["N"] == 1
        assert report.quantity == "space-norm"

    def test_harmonic_surrogate(self, dirac_at_one):
        report = monomial_growth(HarmonicDirichlet(dirac_at_one), 8)
        assert report.bound_margin >= -1e-9
        assert report.extras["witness_set"] == "F1"
        assert report.extras["pointwise_margin"] >= -1e-9
        assert "F1" in report.norm_tag

    def test_no_designated_norm(self, hardy):
        with pytest.raises(PreconditionError, match="designated"):
            monomial_growth(hardy, 8)

    def test_needs_positive_range(self):
        with pytest.raises(ValueError, match="at least 1"):
            monomial_growth(BesovDirichlet(2.0, 0.0), 0)

    def test_coefficient_growth(self, half_mate):
        growth = coefficient_growth(half_mate, 64)
        assert np.allclose(growth.partial_sums, 1.0 + 4.0 * np.arange(65))
        assert growth.cauchy_ok
        assert growth.cauchy_checked[:3] == (0, 1, 2)


class TestMultipliers:
    """Test section lower bounds for multiplier norms."""

    def test_hardy_sections_stay_below_sup(self, hardy):
        check = multiplier_inequality_check(hardy, Poly((1.0, 1.0)), 16)
        assert check.op_norm_lower <= check.sup_norm + 1e-12
        assert check.sup_norm == pytest.approx(2.0)
        assert check.space_norm == pytest.approx(math.sqrt(2.0))
        assert check.combined_lower_bound >= math.sqrt(2.0)

    def test_dirichlet_shift_exceeds_sup(self, dirichlet):
        check = multiplier_inequality_check(dirichlet, Poly.monomial(1), 4)
        assert check.op_norm_lower == pytest.approx(math.sqrt(2.0))
        assert check.sup_gap < 0

    def test_sections_increase(self, hardy):
        sweep = multiplier_section_sweep(hardy, Poly((1.0, 1.0)), (0, 1, 4, 16))
        assert sweep.monotone
        assert sweep.lower_bounds[0] == pytest.approx(math.sqrt(2.0))
        assert all(gap > 0 for gap in sweep.gaps)

    def test_zero_multiplier(self, hardy):
        assert section_norm(hardy, Poly.zero(), 4) == 0.0

    def test_besov_sections_unavailable(self):
        with pytest.raises(NonHilbertSpaceError):
            section_norm(BesovDirichlet(3.0, 1.5), Poly.monomial(1), 4)


class TestPowerSums:
    """Test sum n^p x^n against p! / (1 - x)^(p + 1)."""

    @pytest.mark.parametrize("x", POWER_SUM_X)
    @pytest.mark.parametrize("p", range(7))
    def test_inequality_and_closed_form(self, p, x):
        check = power_sum_inequality(p, x)
        assert check.holds
        assert check.lhs == pytest.approx(check.closed_form, rel=1e-10)

    def test_eulerian_numbers(self):
        assert eulerian_numbers(0) == []
        assert eulerian_numbers(3) == [1, 4, 1]
        assert eulerian_numbers(4) == [1, 11, 11, 1]

    def test_closed_form_small_cases(self):
        assert power_sum_closed_form(0, 0.5) == pytest.approx(2.0)
        assert power_sum_closed_form(1, 0.5) == pytest.approx(2.0)

    def test_closed_form_needs_open_interval(self):
        with pytest.raises(PreconditionError, match=r"\(0, 1\)"):
            power_sum_closed_form(2, 1.0)


class TestResolvent:
    """Test the resolvent series bound."""

    def test_hardy_geometric_series(self):
        check = resolvent_bound_check([1.0] * 256, 0, 2.0)
        assert check.series_value == pytest.approx(1.0)
        assert check.bound == pytest.approx(2.0)
        assert check.holds

    @pytest.mark.parametrize("radius", [1.01, 1.5, 10.0])
    def test_linear_growth(self, radius):
        check = resolvent_bound_check([max(n, 1) for n in range(256)], 1, radius * 1j)
        assert check.constant == pytest.approx(1.0)
        assert check.holds

    def test_divergent_inside_disc(self):
        with pytest.raises(DivergenceError):
            resolvent_bound_check([1.0], 0, 0.5)

    def test_too_close_to_circle(self):
        with pytest.raises(PreconditionError, match="too close"):
            resolvent_bound_check([1.0], 0, 1.0 + 1e-7)

    def test_empty_sequence(self):
        with pytest.raises(PreconditionError, match="empty"):
            resolvent_bound_check([], 0, 2.0)
