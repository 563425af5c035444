"""Oracles: series and quadrature evaluators, error-bar honesty, tail bounds."""

from __future__ import annotations

import math

import numpy as np
import pytest

from polycm import (
    GAMMA_EULER,
    LN2,
    PI,
    QuadratureError,
    QuadratureSpec,
    SeriesSpec,
    ShiftParams,
    cm_weight,
    digamma_series,
    gap_integral_even,
    gap_integral_odd,
    polygamma,
    polygamma_integral,
    polygamma_series,
    power_integral,
    shift_gap_derivative,
    zeta_int,
)

BIG = SeriesSpec(max_terms=4_000_000)


class TestSeries:
    def test_digamma_half(self):
        # psi(1/2) = -gamma - 2 ln 2; 4e6 terms puts the midpoint tail
        # error near x/(2K^2) ~ 1.6e-14
        r = digamma_series(0.5, BIG)
        assert abs(r.value - (-GAMMA_EULER - 2.0 * LN2)) <= 1e-13
        assert abs(r.value - (-GAMMA_EULER - 2.0 * LN2)) <= r.abs_error_estimate

    def test_digamma_known_points(self):
        for x, expected in [(1.0, -GAMMA_EULER), (2.0, 1.0 - GAMMA_EULER)]:
            r = digamma_series(x)
            assert abs(r.value - expected) <= r.abs_error_estimate
            assert abs(r.value - expected) <= 5e-12

    def test_polygamma_known_points(self):
        # the last reference is -24 (zeta(5) - 1); written via zeta_int the
        # subtraction from 1 would amplify zeta rounding ~650x, so the value
        # is frozen from a 2e6-term direct summation with an integral tail
        cases = [
            (1, 1.0, PI * PI / 6.0),
            (2, 1.0, -2.0 * zeta_int(3)),
            (3, 0.5, PI**4),
            (4, 2.0, -0.8862661234408782),
        ]
        for n, x, expected in cases:
            r = polygamma_series(n, x)
            assert abs(r.value - expected) <= r.abs_error_estimate, (n, x)
            assert r.value == pytest.approx(expected, rel=5e-12)

    def test_error_bar_covers_engine(self):
        for n in range(1, 9):
            for x in (0.1, 1.0, 7.3, 52.0):
                s = polygamma_series(n, x)
                e = polygamma(n, x)
                assert abs(s.value - e.value) <= s.abs_error_estimate + e.abs_error_estimate

    def test_tail_rules_differ_by_correction(self):
        # the integral-comparison value minus the next-term value is exactly
        # the correction n!/(n (K+x)^n); checking the identity checks both
        n, x = 2, 1.5
        spec_ic = SeriesSpec(max_terms=100_000, tail_rule="integral-comparison")
        spec_nt = SeriesSpec(max_terms=100_000, tail_rule="next-term")
        ic = polygamma_series(n, x, spec_ic)
        nt = polygamma_series(n, x, spec_nt)
        corr = math.factorial(n) / (n * (100_000 + x) ** n)
        assert abs(ic.value - nt.value) == pytest.approx(corr, rel=1e-12)
        # next-term deliberately omits the correction, so its bar is smaller
        # but its value is farther from truth
        truth = polygamma(n, x).value
        assert abs(nt.value - truth) > abs(ic.value - truth)

    def test_more_terms_tighten_the_bar(self):
        small = polygamma_series(1, 1.0, SeriesSpec(max_terms=10_000))
        large = polygamma_series(1, 1.0, SeriesSpec(max_terms=1_000_000))
        assert large.abs_error_estimate < small.abs_error_estimate

    def test_series_spec_validation(self):
        with pytest.raises(ValueError):
            SeriesSpec(max_terms=10)
        with pytest.raises(ValueError):
            SeriesSpec(tail_rule="magic")
        with pytest.raises(ValueError):
            polygamma_series(0, 1.0)
        with pytest.raises(ValueError):
            polygamma_series(1, -1.0)
        with pytest.raises(ValueError):
            digamma_series(0.0)


class TestQuadrature:
    def test_digamma_at_one_is_minus_gamma(self):
        # the integrand vanishes identically at x = 1
        r = polygamma_integral(0, 1.0)
        assert r.value == pytest.approx(-GAMMA_EULER, abs=1e-15)

    def test_closed_forms(self):
        cases = [
            (0, 0.5, -GAMMA_EULER - 2.0 * LN2),
            (1, 1.0, PI * PI / 6.0),
            (2, 1.0, -2.0 * zeta_int(3)),
            (3, 0.5, PI**4),
        ]
        for n, x, expected in cases:
            r = polygamma_integral(n, x)
            assert abs(r.value - expected) <= r.abs_error_estimate, (n, x)
            assert r.value == pytest.approx(expected, rel=1e-11)

    def test_agrees_with_engine_including_digamma(self):
        for n in range(0, 9):
            for x in (0.1, 0.9, 3.0, 41.0):
                q = polygamma_integral(n, x)
                e = polygamma(n, x)
                assert abs(q.value - e.value) <= q.abs_error_estimate + e.abs_error_estimate

    def test_power_integral_closed_form(self):
        r = power_integral(3, 2.0)
        assert abs(r.value - 0.375) <= r.abs_error_estimate
        r = power_integral(0, 5.0)
        assert r.value == pytest.approx(0.2, rel=1e-11)

    def test_tail_honesty_on_short_cutoff(self):
        # doubling an explicit cutoff must move the value by less than the
        # error reported for the short one
        short = polygamma_integral(2, 1.0, QuadratureSpec(upper_cutoff=20.0))
        long = polygamma_integral(2, 1.0, QuadratureSpec(upper_cutoff=40.0))
        moved = abs(long.value - short.value)
        assert moved <= short.abs_error_estimate
        assert moved > 0.0

    def test_rel_tol_is_respected(self):
        coarse = QuadratureSpec(rel_tol=1e-6)
        r = polygamma_integral(1, 1.0, coarse)
        truth = PI * PI / 6.0
        assert abs(r.value - truth) <= 10.0 * 1e-6 * truth
        assert abs(r.value - truth) <= r.abs_error_estimate

    def test_subdivision_budget_failure_is_loud(self):
        # a high-order integrand at small x needs ~15 splits to hit 1e-14,
        # so a 10-split budget must fail by raising, never silently
        tight = QuadratureSpec(rel_tol=1e-14, max_subdivisions=10)
        with pytest.raises(QuadratureError):
            polygamma_integral(40, 0.02, tight)

    def test_quadrature_spec_validation(self):
        with pytest.raises(ValueError):
            QuadratureSpec(rel_tol=1e-20)
        with pytest.raises(ValueError):
            QuadratureSpec(rel_tol=1e-3)
        with pytest.raises(ValueError):
            QuadratureSpec(upper_cutoff=-5.0)
        with pytest.raises(ValueError):
            QuadratureSpec(max_subdivisions=3)


class TestThreeWay:
    @pytest.mark.parametrize("n", [1, 2, 4, 8])
    def test_engine_series_integral_agree(self, n):
        for x in (0.1, 1.0, 10.0, 100.0):
            e = polygamma(n, x)
            s = polygamma_series(n, x)
            q = polygamma_integral(n, x)
            assert abs(e.value - s.value) <= e.abs_error_estimate + s.abs_error_estimate
            assert abs(e.value - q.value) <= e.abs_error_estimate + q.abs_error_estimate
            assert abs(s.value - q.value) <= s.abs_error_estimate + q.abs_error_estimate

    def test_digamma_three_way(self):
        for x in (0.05, 0.5, 1.0, 2.5, 30.0):
            e = polygamma(0, x)
            s = digamma_series(x)
            q = polygamma_integral(0, x)
            assert abs(e.value - s.value) <= e.abs_error_estimate + s.abs_error_estimate
            assert abs(e.value - q.value) <= e.abs_error_estimate + q.abs_error_estimate
            assert abs(s.value - q.value) <= s.abs_error_estimate + q.abs_error_estimate


class TestGapIntegrals:
    def test_weight_shape_and_limits(self):
        a = 0.3
        ts = np.geomspace(1e-8, 200.0, 60)
        w = cm_weight(a, ts)
        assert np.all(w > 0.0)
        # the sup 1 - a is only approached; strictness is checkable until
        # e^-at dips under an ulp of 0.7, after which w saturates to 1 - a
        assert np.all(w <= 1.0 - a)
        assert np.all(w[ts <= 100.0] < 1.0 - a)
        # small-t slope a(1-a)/2, large-t limit 1-a
        assert cm_weight(a, 1e-9) == pytest.approx(a * (1 - a) / 2 * 1e-9, rel=1e-6)
        assert cm_weight(a, 200.0) == pytest.approx(1.0 - a, rel=1e-12)
        assert cm_weight(a, 0.0) == 0.0

    def test_weight_rejects(self):
        with pytest.raises(ValueError):
            cm_weight(1.0, 1.0)
        with pytest.raises(ValueError):
            cm_weight(0.3, -1.0)

    def test_even_matches_derivative(self):
        # int w(t) t^(k+n) e^-xt dt equals (-1)^n g^(n)(x) for even k
        for (a, k, n, x) in [(0.5, 0, 0, 1.0), (0.3, 2, 1, 0.7), (0.7, 4, 2, 2.0)]:
            q = gap_integral_even(a, k + n, x)
            d = shift_gap_derivative(ShiftParams(a=a, k=k), n, x)
            target = (1.0 if n % 2 == 0 else -1.0) * d.value
            assert abs(q.value - target) <= q.abs_error_estimate + d.abs_error_estimate

    def test_odd_matches_negated_derivative(self):
        # int (2a + w(t)) t^(k+n) e^-xt dt equals (-1)^(n+1) g^(n)(x), odd k
        for (a, k, n, x) in [(0.5, 1, 0, 1.0), (0.3, 3, 1, 0.7), (0.7, 5, 2, 2.0)]:
            q = gap_integral_odd(a, k + n, x)
            d = shift_gap_derivative(ShiftParams(a=a, k=k), n, x)
            target = (-1.0 if n % 2 == 0 else 1.0) * d.value
            assert abs(q.value - target) <= q.abs_error_estimate + d.abs_error_estimate

    def test_odd_bracket_equals_three_integral_composition(self):
        # the odd bracket integral written as its three separate pieces:
        # a n!/x^(n+1) + |psi_m(x)| - |psi_m(x+a)| with m = k + n
        a, k, n, x = 0.5, 1, 1, 1.3
        m = k + n
        q = gap_integral_odd(a, m, x)
        pw = power_integral(m, x)
        at_x = polygamma_integral(m, x)
        at_xa = polygamma_integral(m, x + a)
        mag_sign = 1.0 if m % 2 == 1 else -1.0
        composed = a * pw.value + mag_sign * at_x.value - mag_sign * at_xa.value
        bar = (
            q.abs_error_estimate
            + a * pw.abs_error_estimate
            + at_x.abs_error_estimate
            + at_xa.abs_error_estimate
        )
        assert abs(q.value - composed) <= bar

    def test_gap_integral_rejects(self):
        with pytest.raises(ValueError):
            gap_integral_even(0.0, 1, 1.0)
        with pytest.raises(ValueError):
            gap_integral_even(0.5, -1, 1.0)
        with pytest.raises(ValueError):
            gap_integral_odd(0.5, 1, 0.0)
