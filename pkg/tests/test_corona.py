# this_file: tests/test_corona.py
"""Tests for corona instances, Bezout pairs, sweeps and the delta_lambda bounds."""

import math
import warnings

import numpy as np
import pytest

from cyclab.config import GridSpec
from cyclab.corona import (
    CoronaInstance,
    bezout_ls,
    boundary_family,
    check_no_poles,
    constant_family,
    delta_inf,
    delta_lambda_dominated,
    delta_lambda_outer,
    exponent_sweep,
    grid_infimum,
    lipschitz_bound,
    log_dominance_check,
    minimal_bezout,
)
from cyclab.errors import (
    CoronaError,
    DominationError,
    FamilyDegenerateError,
    OuterCheckError,
    PoleError,
    PreconditionError,
)
from cyclab.polyrat import Poly, Rat

GRID = GridSpec(radii=32, angles=128, circle=512)
Z = Poly.monomial(1)
ONE_MINUS_Z = Poly((1.0, -1.0))


class TestInfimum:
    """Test grid infima with zoom refinement."""

    def test_zoom_finds_interior_minimum(self):
        result = grid_infimum(lambda z: np.abs(z - 0.3), 1.0, GRID)
        assert result.value < 1e-3
        assert abs(result.argmin - 0.3) < 1e-3
        assert result.grid_error > 0

    @pytest.mark.parametrize(
        ("f1", "f2"),
        [(Z, ONE_MINUS_Z), (Z**2, Poly((0.3, -1.0))), (Poly((0.2, 0.0, 1.0)), Z.scaled(0.5))],
    )
    def test_refinement_stays_within_lipschitz_estimate(self, f1, f2):
        def sampler(z):
            return np.abs(f1(z)) + np.abs(f2(z))

        lipschitz = lipschitz_bound(f1) + lipschitz_bound(f2)
        coarse = grid_infimum(sampler, lipschitz, GridSpec(radii=17, angles=32, circle=64))
        fine = grid_infimum(sampler, lipschitz, GridSpec(radii=33, angles=64, circle=128))
        assert fine.value <= coarse.value + coarse.grid_error

    def test_lipschitz_of_polynomial(self):
        assert lipschitz_bound(Poly((0.0, 1.0, 1.0))) == pytest.approx(3.0)

    def test_pole_in_disc(self):
        with pytest.raises(PoleError):
            check_no_poles(Rat(Poly((1.0,)), Poly((1.0, -2.0))))

    def test_grid_validation(self):
        with pytest.raises(ValueError, match="at least 2 radii"):
            GridSpec(radii=1)
        with pytest.raises(ValueError, match="shrink"):
            GridSpec(refine_shrink=1.0)


class TestInstance:
    """Test corona data validation."""

    def test_delta_of_coprime_pair(self):
        inst = CoronaInstance.build(Z, ONE_MINUS_Z, grid=GRID)
        assert inst.delta == pytest.approx(1.0, abs=1e-9)
        assert inst.upper >= inst.delta
        assert inst.to_dict()["delta"] == inst.delta

    def test_delta_inf_with_constant(self):
        assert delta_inf(Z, Poly.constant(0.5), GRID) == pytest.approx(0.5, abs=1e-9)

    def test_common_zero_rejected(self):
        shared = ONE_MINUS_Z * Poly((2.0, 1.0))
        with pytest.raises(CoronaError, match="share the zero"):
            CoronaInstance.build(ONE_MINUS_Z, shared, grid=GRID)

    def test_nonpositive_delta_rejected(self):
        with pytest.raises(CoronaError):
            CoronaInstance(Z, ONE_MINUS_Z, 0.0, 2.0)


class TestBezout:
    """Test least-squares Bezout pairs."""

    def test_degree_zero_pair(self, hardy):
        inst = CoronaInstance.build(Z, ONE_MINUS_Z, grid=GRID)
        solution = bezout_ls(hardy, inst, 0)
        assert solution.accepted
        assert solution.g1.allclose(Poly.constant(1.0), 1e-10)
        assert solution.g2.allclose(Poly.constant(1.0), 1e-10)

    def test_constant_pair_takes_minimal_norm(self, hardy):
        (inst,) = constant_family([0.5], GRID)
        solution = minimal_bezout(hardy, inst, [0, 1, 2])
        assert solution is not None
        assert solution.degree == 0
        assert solution.g_norms[0] == pytest.approx(0.0, abs=1e-10)
        assert solution.g_norms[1] == pytest.approx(2.0)

    @pytest.mark.parametrize("space", ["hardy", "dirichlet"])
    def test_residual_nonincreasing_in_degree(self, space, request):
        inst = CoronaInstance.build(
            Poly.from_roots([0.5, 0.5]), Poly.from_roots([-0.5, -0.5]), grid=GRID
        )
        residuals = [bezout_ls(request.getfixturevalue(space), inst, d).residual for d in range(6)]
        assert residuals[0] > 1e-3
        assert all(b <= a + 1e-10 for a, b in zip(residuals, residuals[1:]))

    def test_negative_degree(self, hardy):
        inst = CoronaInstance.build(Z, ONE_MINUS_Z, grid=GRID)
        with pytest.raises(ValueError, match="nonnegative"):
            bezout_ls(hardy, inst, -1)


class TestSweep:
    """Test exponent sweeps over corona families."""

    def test_constant_family_has_unit_exponent(self, hardy):
        family = constant_family(np.geomspace(0.01, 0.5, 6), GRID)
        fit = exponent_sweep(hardy, family)
        assert fit.fitted_A == pytest.approx(1.0, rel=1e-6)
        assert fit.decades >= 1.5
        assert len(fit.rows) == 6

    def test_threads_do_not_change_fit(self, hardy):
        family = constant_family(np.geomspace(0.01, 0.5, 6), GRID)
        assert exponent_sweep(hardy, family, threads=3) == exponent_sweep(hardy, family)

    def test_too_few_instances(self, hardy):
        with pytest.raises(FamilyDegenerateError, match="converged"):
            exponent_sweep(hardy, constant_family([0.01, 0.1, 0.5], GRID))

    def test_too_narrow_span(self, hardy):
        with pytest.raises(FamilyDegenerateError, match="decades"):
            exponent_sweep(hardy, constant_family([0.1, 0.15, 0.2, 0.25], GRID))

    def test_empty_family(self, hardy):
        with pytest.raises(FamilyDegenerateError, match="empty"):
            exponent_sweep(hardy, [])

    def test_boundary_family_shrinks(self):
        family = boundary_family([0.5, 0.05], GRID)
        assert family[1].delta < family[0].delta
        assert all(inst.upper <= 1.0 + 1e-9 for inst in family)

    def test_boundary_family_needs_positive_parameter(self):
        with pytest.raises(ValueError, match="positive"):
            boundary_family([0.0], GRID)


class TestDeltaLambda:
    """Test the delta_lambda lower bounds."""

    @pytest.mark.parametrize("lam", [1.0, 4.0, 0.5j])
    def test_dominated_bound_holds(self, lam):
        report = delta_lambda_dominated(Z, Z.scaled(0.5), lam, GRID)
        assert report.holds
        assert report.bound == pytest.approx(min(0.5, 1.0 / (2.0 * abs(lam))))
        assert report.normalized_value <= 1.0

    def test_domination_failure_has_witness(self):
        with pytest.raises(DominationError) as info:
            delta_lambda_dominated(Z.scaled(0.5), Z, 1.0, GRID)
        assert abs(info.value.witness) > 0

    def test_zero_lambda(self):
        with pytest.raises(PreconditionError, match="nonzero"):
            delta_lambda_dominated(Z, Z, 0.0, GRID)

    def test_outer_bound_holds(self):
        report = delta_lambda_outer(Poly((2.0, -1.0)), 0.5, 0.1, GRID)
        assert report.holds
        assert report.c_eps is not None
        assert report.c_eps >= 1.0

    def test_outer_constant_near_boundary_zero(self):
        # |1 - z| exp(eps / (2 (1 - |z|))) is smallest at 1 - |z| = eps / 2
        with warnings.catch_warnings():
            warnings.simplefilter("error", RuntimeWarning)
            report = delta_lambda_outer(ONE_MINUS_Z, 0.5, 0.1, GridSpec(radii=64, angles=128))
        assert report.holds
        expected = 0.05 * math.e
        assert math.isfinite(report.c_eps)
        assert expected * (1.0 - 1e-9) <= report.c_eps <= 1.05 * expected

    def test_outer_needs_outer_function(self):
        with pytest.raises(OuterCheckError):
            delta_lambda_outer(Poly((-0.5, 1.0)), 0.5, 0.1, GRID)

    def test_outer_excludes_unit_lambda(self):
        with pytest.raises(PreconditionError, match="excluded"):
            delta_lambda_outer(Poly((2.0, -1.0)), 1.0, 0.1, GRID)


class TestLogDominance:
    """Test the log-dominance hypothesis check."""

    def test_zero_g_satisfies_bound(self, hardy):
        report = log_dominance_check(ONE_MINUS_Z, Poly.zero(), 2.0, hardy, GRID, f_norm=2.0)
        assert report
        assert report.witness is None

    def test_negative_real_part_fails(self, hardy):
        report = log_dominance_check(ONE_MINUS_Z, Poly.constant(-1.0), 2.0, hardy, GRID, 2.0)
        assert not report
        assert report.reason == "Re g < 0"

    def test_gamma_must_exceed_one(self, hardy):
        with pytest.raises(ValueError, match="gamma"):
            log_dominance_check(ONE_MINUS_Z, Poly.zero(), 1.0, hardy, GRID)
