# this_file: tests/test_polyrat.py
"""Tests for polynomials, rational functions, factorization and mates."""

import math

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given

from cyclab.errors import (
    InnerFunctionError,
    NegativityError,
    NotInBallError,
    PoleError,
    SeriesError,
)
from cyclab.polyrat import (
    Poly,
    Rat,
    TrigPoly,
    cauchy_coefficient_bound,
    circle_clusters,
    cluster_roots,
    fejer_riesz,
    mate,
    poles_in_closed_disc,
    poly_roots,
    series_div,
    spectral_factor,
    sup_circle,
    synth_div,
    vanishes_to_order,
)

coefficient = st.floats(min_value=-10, max_value=10, allow_nan=False)
small_polys = st.lists(coefficient, min_size=1, max_size=6).map(Poly)


class TestPoly:
    """Test the Poly value type."""

    def test_trailing_zeros_are_stripped(self):
        p = Poly((1.0, 2.0, 0.0, 0.0))
        assert p.degree == 1
        assert p.coeffs == (1 + 0j, 2 + 0j)

    def test_zero_polynomial(self):
        assert Poly.zero().degree == -1
        assert Poly((0.0, 0.0)).is_zero

    def test_evaluation(self):
        p = Poly((1.0, -3.0, 2.0))
        assert p(2.0) == pytest.approx(3.0)
        values = p(np.array([0.0, 1.0]))
        assert np.allclose(values, [1.0, 0.0])

    def test_arithmetic(self):
        p = Poly((1.0, 1.0))
        q = Poly((1.0, -1.0))
        assert (p * q).allclose(Poly((1.0, 0.0, -1.0)))
        assert (p + q).allclose(Poly.constant(2.0))
        assert (p - 1.0).allclose(Poly.monomial(1))
        assert (p**3).allclose(Poly((1.0, 3.0, 3.0, 1.0)))

    def test_from_roots(self):
        p = Poly.from_roots([1.0, -1.0])
        assert p.allclose(Poly((-1.0, 0.0, 1.0)))

    def test_negative_monomial_rejected(self):
        with pytest.raises(ValueError, match="nonnegative"):
            Poly.monomial(-1)

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError, match="finite"):
            Poly((1.0, float("nan")))

    def test_json_accepts_pairs_and_numbers(self):
        p = Poly.from_json([1.0, [0.0, 2.0]])
        assert p.coeffs == (1 + 0j, 2j)
        assert Poly.from_json(p.to_json()) == p

    def test_bad_json_pair(self):
        with pytest.raises(ValueError, match=r"\[re, im\]"):
            Poly.from_json([[1.0, 2.0, 3.0]])

    @given(small_polys, small_polys)
    def test_product_evaluates_as_product(self, p, q):
        z = 0.3 + 0.4j
        expected = p(z) * q(z)
        assert abs((p * q)(z) - expected) <= 1e-9 * max(1.0, abs(expected))


class TestRat:
    """Test rational functions."""

    def test_evaluation(self):
        r = Rat(Poly((1.0,)), Poly((1.0, -0.5)))
        assert r(0.0) == pytest.approx(1.0)
        assert r(1.0) == pytest.approx(2.0)

    def test_pole_raises(self):
        r = Rat(Poly((1.0,)), Poly((1.0, -1.0)))
        with pytest.raises(PoleError):
            r(1.0)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ValueError, match="Denominator"):
            Rat(Poly((1.0,)), Poly.zero())

    def test_from_json_defaults_denominator(self):
        r = Rat.from_json({"num": [0.5, 0.5]})
        assert r.is_polynomial
        assert r(1.0) == pytest.approx(1.0)

    def test_from_json_needs_num(self):
        with pytest.raises(ValueError, match="num"):
            Rat.from_json({"den": [1.0]})

    def test_derivative(self):
        r = Rat(Poly((0.0, 1.0)), Poly((1.0, -0.5)))
        # d/dz z / (1 - z/2) = 1 / (1 - z/2)^2
        assert r.derivative()(0.0) == pytest.approx(1.0)
        assert r.derivative()(1.0) == pytest.approx(4.0)


class TestSeries:
    """Test synthetic division and truncated series."""

    def test_synth_div(self):
        quotient, remainder = synth_div(Poly((-1.0, 0.0, 1.0)), 1.0)
        assert quotient.allclose(Poly((1.0, 1.0)))
        assert remainder == pytest.approx(0.0)

    def test_synth_div_remainder_is_value(self):
        g = Poly((2.0, 3.0, 1.0))
        _, remainder = synth_div(g, 0.5)
        assert remainder == pytest.approx(g(0.5))

    def test_series_div(self):
        c = series_div(Poly((1.0, 1.0)), Poly((1.0, -1.0)), 6)
        assert np.allclose(c, [1, 2, 2, 2, 2, 2])

    def test_series_div_needs_nonzero_constant(self):
        with pytest.raises(SeriesError, match="a\\(0\\)"):
            series_div(Poly((1.0,)), Poly((0.0, 1.0)), 4)


class TestRoots:
    """Test root finding and clustering."""

    def test_roots(self):
        roots = np.sort_complex(poly_roots(Poly.from_roots([2.0, -0.5])))
        assert np.allclose(roots, [-0.5, 2.0])

    def test_cluster_roots(self):
        clusters = cluster_roots(np.array([1.0, 1.0 + 1e-5, 3.0]), 1e-3)
        assert sorted(c.multiplicity for c in clusters) == [1, 2]

    def test_cluster_keeps_members(self):
        clusters = cluster_roots(np.array([3.0, 1.0, 1.0 + 1e-5]), 1e-3)
        pair = next(c for c in clusters if c.multiplicity == 2)
        assert sorted(abs(m) for m in pair.members) == pytest.approx([1.0, 1.0 + 1e-5])
        assert pair.centroid == pytest.approx(1.0 + 5e-6)

    def test_cluster_of_nothing(self):
        assert cluster_roots(np.array([], dtype=complex), 1e-3) == []

    def test_vanishes_to_order(self):
        p = Poly.from_roots([1.0, 1.0, 2.0])
        assert vanishes_to_order(p, 1.0, 2, 1e-9)
        assert not vanishes_to_order(p, 1.0, 3, 1e-9)
        assert not vanishes_to_order(Poly.from_roots([1.0004, 0.9996]), 1.0, 2, 1e-9)

    def test_mirror_pair_is_not_a_circle_zero(self):
        p = Poly.from_roots([1.0004, 1.0 / 1.0004])
        on_circle, off_circle = circle_clusters(p, poly_roots(p), 1e-3, 1e-6, 1e-9)
        assert on_circle == []
        moduli = sorted(abs(c.centroid) for c in off_circle)
        assert moduli == pytest.approx([1.0 / 1.0004, 1.0004], rel=1e-12)

    def test_double_circle_zero_is_confirmed(self):
        p = Poly.from_roots([1.0, 1.0, 2.0])
        on_circle, off_circle = circle_clusters(p, poly_roots(p), 1e-3, 1e-6, 1e-9)
        assert [c.multiplicity for c in on_circle] == [2]
        assert abs(on_circle[0].centroid - 1.0) <= 1e-6
        assert len(off_circle) == 1

    def test_poles_in_closed_disc(self):
        assert np.allclose(poles_in_closed_disc(Poly((0.5, -1.0))), [0.5])
        assert poles_in_closed_disc(Poly((2.0, -1.0))) == []

    def test_sup_circle(self):
        assert sup_circle(Poly((1.0, 1.0))) == pytest.approx(2.0)
        assert sup_circle(Poly((1.0, 1.0)), radius=0.5) == pytest.approx(1.5)


class TestFejerRiesz:
    """Test spectral factorization."""

    def test_recovers_outer_factor(self):
        q = fejer_riesz(TrigPoly.from_poly_modulus(Poly((2.0, -1.0))))
        assert q.allclose(Poly((2.0, -1.0)), 1e-9)

    def test_reflects_inner_roots(self):
        # |1 - 2z| = |2 - z| on the circle
        q = fejer_riesz(TrigPoly.from_poly_modulus(Poly((1.0, -2.0))))
        assert q.allclose(Poly((2.0, -1.0)), 1e-9)

    def test_roots_near_circle_stay_apart(self):
        factor = spectral_factor(TrigPoly.from_poly_modulus(Poly((-1.0004, 1.0))))
        assert factor.boundary_zeros == ()
        assert factor.q.allclose(Poly((1.0004, -1.0)), 1e-9)
        assert factor.residual <= 1e-9

    def test_constant(self):
        q = fejer_riesz(TrigPoly.constant(4.0))
        assert q.allclose(Poly.constant(2.0))

    def test_negative_rejected(self):
        with pytest.raises(NegativityError):
            fejer_riesz(TrigPoly((1.0, 0.0, 1.0)))

    def test_trig_poly_needs_odd_length(self):
        with pytest.raises(ValueError, match="odd"):
            TrigPoly((1.0, 1.0))

    def test_trig_poly_needs_symmetry(self):
        with pytest.raises(ValueError, match="conj"):
            TrigPoly((1.0, 0.0, 2.0))


class TestMate:
    """Test pythagorean mates of rational symbols."""

    def test_half_plus_half_z(self, half_mate):
        a = half_mate.a.num.scaled(1.0 / half_mate.a.den.coefficient(0))
        assert a.allclose(Poly((0.5, -0.5)), 1e-9)
        assert half_mate.N == 1
        assert abs(half_mate.boundary_zeros[0][0] - 1.0) <= 1e-9
        assert half_mate.roundtrip_residual <= 1e-9
        assert np.allclose(half_mate.coefficients(5), [1, 2, 2, 2, 2])

    def test_corona_threshold(self, half_mate):
        assert half_mate.corona_threshold == 3.0

    def test_constant_mate(self):
        result = mate(Poly((0.0, 0.5)))
        assert result.N == 0
        assert result.a(0.0).real == pytest.approx(math.sqrt(3.0) / 2.0)

    def test_double_boundary_zero(self):
        alpha = 3.0 - 2.0 * math.sqrt(2.0)
        scale = 1.0 / (4.0 * math.sqrt(alpha))
        b = Poly((scale, (1.0 - alpha) * scale, -alpha * scale))
        result = mate(b)
        assert result.N == 2
        assert result.max_multiplicity == 2
        a = result.a.num.scaled(1.0 / result.a.den.coefficient(0))
        assert a.allclose(Poly((0.25, -0.5, 0.25)), 1e-6)

    def test_zero_just_outside_circle(self):
        # 1 - |b|^2 = c |w - z|^2 on the circle, so a = sqrt(c) (w - z) with w > 1
        c, w = 0.09, 1.0004
        s = 1.0 - c * (1.0 + w * w)
        total, diff = math.sqrt(s + 2.0 * c * w), math.sqrt(s - 2.0 * c * w)
        result = mate(Poly(((total + diff) / 2.0, (total - diff) / 2.0)))
        assert result.N == 0
        assert result.boundary_zeros == ()
        assert result.roundtrip_residual <= 1e-9
        a = result.a.num.scaled(1.0 / result.a.den.coefficient(0))
        assert a.allclose(Poly((0.3 * w, -0.3)), 1e-9)

    def test_rational_symbol(self):
        b = Rat(Poly((0.5,)), Poly((1.0, -0.5)))
        result = mate(b)
        assert result.N == 1
        assert result.roundtrip_residual <= 1e-9
        assert result.a(0.0).real > 0

    def test_inner_symbol_rejected(self):
        with pytest.raises(InnerFunctionError):
            mate(Poly((0.0, 1.0)))

    def test_outside_ball_rejected(self):
        with pytest.raises(NotInBallError):
            mate(Poly((0.5, 1.0)))

    def test_pole_in_disc_rejected(self):
        with pytest.raises(PoleError):
            mate(Rat(Poly((0.1,)), Poly((0.5, -1.0))))

    def test_truncation_length(self):
        result = mate(Poly((0.5, 0.5)), n_max=8)
        assert result.truncation_length == 4 * 8 + 16
        assert len(result.coefficients(100)) == 100

    def test_cauchy_bound_dominates_coefficients(self, half_mate):
        c = half_mate.coefficients(65)
        for j in (0, 1, 8, 64):
            bound, radius = cauchy_coefficient_bound(half_mate, j)
            assert abs(c[j]) <= bound * (1 + 1e-9)
            assert 0 < radius < 1
