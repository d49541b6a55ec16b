#!/usr/bin/env python3
"""
Unit tests for the SMPtW distribution service
=============================================

Covers:
- Density family (pdf / cdf / survival / hazard / quantile / median) against
  closed forms, finite differences, quadrature and bisection oracles
- Moments, mgf and characteristic function (series and quadrature fallback)
- Mode, mean waiting time, mean residual life
- Stress-strength reliability (closed form vs quadrature, symmetry)
- Order statistics and Renyi entropy
- lambda -> 1 reduction to the standard Weibull
- Domain errors
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from smptw.core.errors import (DegenerateInputError, DomainError,
                               NonConvergenceError)
from smptw.schema import (OrderStatSpec, QuadratureConfig, SeededStream,
                          SmptwParams, StressStrengthPair)
from smptw.services import distribution as d
from smptw.services.sampler import sample
from smptw.utils.numerics import find_root, integrate

TIGHT = QuadratureConfig(abs_tol=1e-14, rel_tol=1e-11)


def P(lam, phi):
    return SmptwParams(lambda_=lam, phi=phi)


def _breaks(p):
    return (d.quantile(p, 0.5), d.quantile(p, 0.99))


class TestParams:
    def test_alias_and_name(self):
        assert SmptwParams(**{"lambda": 3.0, "phi": 7.0}) == P(3.0, 7.0)
        assert P(3.0, 7.0).model_dump() == {"lambda": 3.0, "phi": 7.0}

    @pytest.mark.parametrize("lam,phi", [(0, 1), (-1, 1), (1, 0), (float("nan"), 1), (2, float("inf"))])
    def test_invalid(self, lam, phi):
        with pytest.raises(ValidationError):
            P(lam, phi)

    def test_weibull_branch_flag(self):
        assert P(1.0, 2.0).is_weibull
        assert P(1.0 + 1e-9, 2.0).is_weibull
        assert not P(1.0 + 1e-6, 2.0).is_weibull


class TestDensityFamily:
    def test_pdf_weibull_member(self):
        assert d.pdf(P(1, 2), 1.0) == pytest.approx(2 * math.exp(-1), rel=1e-14)

    def test_pdf_zero_at_origin_for_phi_above_one(self):
        assert d.pdf(P(3, 2), 0.0) == 0.0

    def test_pdf_is_cdf_derivative(self):
        p, h = P(3, 2), 1e-5
        fd = (d.cdf(p, 1 + h) - d.cdf(p, 1 - h)) / (2 * h)
        assert d.pdf(p, 1.0) == pytest.approx(fd, rel=1e-7)

    def test_cdf_matches_quadrature(self):
        p = P(3, 2)
        assert d.cdf(p, 1.0) == pytest.approx(integrate(lambda y: d.pdf(p, y), 0, 1, TIGHT), abs=1e-8)

    def test_cdf_examples(self, grid_params):
        assert d.cdf(grid_params, 0.0) == 0.0
        assert d.cdf(P(1, 3), 1.0) == pytest.approx(1 - math.exp(-1), rel=1e-14)

    def test_cdf_is_smp_transform_of_weibull(self, grid_params):
        lam, phi = grid_params.lambda_, grid_params.phi
        for y in np.linspace(0.01, 4, 60):
            g = -math.expm1(-(y**phi))
            expected = g if lam == 1 else lam * (1 - lam ** (-g)) / (lam - 1)
            assert abs(d.cdf(grid_params, y) - expected) <= 1e-14

    def test_normalization(self, grid_params):
        total = integrate(lambda y: d.pdf(grid_params, y), 0, math.inf, breakpoints=_breaks(grid_params))
        assert total == pytest.approx(1.0, abs=1e-8)

    def test_cdf_nondecreasing_and_bounded(self, grid_params):
        ys = np.linspace(0, 6, 400)
        F = d.cdf(grid_params, ys)
        assert np.all(np.diff(F) >= 0)
        assert np.all((F >= 0) & (F <= 1))

    def test_survival_examples(self):
        assert d.survival(P(3, 2), 0.0) == 1.0
        assert d.survival(P(1, 1), 2.0) == pytest.approx(math.exp(-2), rel=1e-14)
        p = P(0.5, 4.5)
        assert d.survival(p, 0.8) == pytest.approx(1 - d.cdf(p, 0.8), abs=1e-14)

    def test_complement(self, grid_params):
        ys = np.linspace(0, 4, 100)
        total = d.survival(grid_params, ys) + d.cdf(grid_params, ys)
        assert np.max(np.abs(total - 1.0)) <= 1e-14

    def test_hazard_examples(self):
        assert d.hazard(P(1, 1), 3.7) == pytest.approx(1.0, abs=1e-12)
        assert d.hazard(P(1, 2), 0.5) == pytest.approx(1.0, rel=1e-14)

    def test_hazard_closed_form(self):
        p, y = P(3, 2), 1.0
        L, z = math.log(3), 1.0
        e = math.exp(L * math.exp(-z))
        closed = e * L * 2 * y * math.exp(-z) / (e - 1)
        assert d.hazard(p, y) == pytest.approx(closed, rel=1e-12)
        assert d.hazard(p, y) == pytest.approx(d.pdf(p, y) / d.survival(p, y), rel=1e-12)

    def test_hazard_constant_for_exponential(self):
        h = d.hazard(P(1, 1), np.linspace(0.01, 20, 50))
        assert np.max(np.abs(h - 1.0)) <= 1e-12

    @pytest.mark.parametrize("lam", [0.5, 1.0, 1.5, 3.0])
    def test_hazard_increasing_for_phi_two(self, lam):
        h = d.hazard(P(lam, 2.0), np.linspace(0.1, 3, 50))
        assert np.all(np.diff(h) > 0)

    @pytest.mark.parametrize("lam", [1.0, 1.5, 3.0])
    def test_hazard_decreasing_for_phi_half(self, lam):
        h = d.hazard(P(lam, 0.5), np.linspace(0.1, 3, 50))
        assert np.all(np.diff(h) < 0)

    def test_quantile_examples(self):
        assert d.quantile(P(1, 2), 1 - math.exp(-1)) == pytest.approx(1.0, rel=1e-13)
        p = P(3, 1)
        root = find_root(lambda y: d.cdf(p, y) - 0.5, (0, 20))
        assert d.quantile(p, 0.5) == pytest.approx(root, abs=1e-10)

    def test_round_trip(self, grid_params):
        for u in (0.001, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999):
            assert abs(d.cdf(grid_params, d.quantile(grid_params, u)) - u) <= 1e-10

    def test_quantile_vectorized(self):
        u = np.array([0.1, 0.5, 0.9])
        q = d.quantile(P(2.5, 1.2), u)
        assert q.shape == (3,)
        assert np.all(np.diff(q) > 0)

    def test_median(self):
        assert d.median(P(1, 1)) == pytest.approx(math.log(2), rel=1e-14)
        assert d.median(P(1, 2)) == pytest.approx(math.sqrt(math.log(2)), rel=1e-14)
        p = P(2.5, 1.2)
        assert d.median(p) == pytest.approx(find_root(lambda y: d.cdf(p, y) - 0.5, (0, 20)), abs=1e-10)

    def test_log_pdf_matches_pdf(self, grid_params):
        ys = np.linspace(0.05, 3, 20)
        assert np.allclose(np.exp(d.log_pdf(grid_params, ys)), d.pdf(grid_params, ys), rtol=1e-14)

    @pytest.mark.parametrize("fn", [d.pdf, d.cdf, d.survival, d.log_pdf])
    def test_negative_y(self, fn):
        with pytest.raises(DomainError):
            fn(P(3, 2), -0.1)

    def test_hazard_requires_positive_y(self):
        with pytest.raises(DomainError):
            d.hazard(P(3, 2), 0.0)

    @pytest.mark.parametrize("u", [0.0, 1.0, -0.2, 1.5])
    def test_quantile_level_out_of_range(self, u):
        with pytest.raises(DomainError):
            d.quantile(P(3, 2), u)


class TestMoments:
    def test_raw_moment_examples(self):
        assert d.raw_moment(P(1, 1), 1) == pytest.approx(1.0, rel=1e-14)
        assert d.raw_moment(P(1, 2), 2) == pytest.approx(1.0, rel=1e-14)

    def test_raw_moment_matches_quadrature(self, grid_params):
        for r in (1, 2, 3, 4):
            quad = integrate(
                lambda y: y**r * d.pdf(grid_params, y), 0, math.inf, TIGHT, _breaks(grid_params)
            )
            assert d.raw_moment(grid_params, r) == pytest.approx(quad, rel=1e-6)

    @pytest.mark.parametrize("r", [0, -1, 1.5])
    def test_raw_moment_order(self, r):
        with pytest.raises(DomainError):
            d.raw_moment(P(3, 2), r)

    def test_mean_variance(self):
        assert d.mean_variance(P(1, 1)) == pytest.approx((1.0, 1.0), rel=1e-12)
        mean, var = d.mean_variance(P(1, 2))
        assert mean == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-12)
        assert var == pytest.approx(1 - math.pi / 4, rel=1e-10)

    def test_mean_variance_quadrature(self):
        p = P(1.5, 2)
        m1 = integrate(lambda y: y * d.pdf(p, y), 0, math.inf, TIGHT)
        m2 = integrate(lambda y: y * y * d.pdf(p, y), 0, math.inf, TIGHT)
        mean, var = d.mean_variance(p)
        assert mean == pytest.approx(m1, rel=1e-8)
        assert var == pytest.approx(m2 - m1 * m1, rel=1e-6)

    def test_mgf_at_zero(self, grid_params):
        assert d.mgf(grid_params, 0.0) == 1.0

    def test_mgf_exponential(self):
        assert d.mgf(P(1, 1), 0.5) == pytest.approx(2.0, rel=1e-8)

    def test_mgf_matches_quadrature(self):
        p = P(3, 2)
        quad = integrate(lambda y: math.exp(y) * d.pdf(p, y), 0, math.inf, TIGHT)
        assert d.mgf(p, 1.0) == pytest.approx(quad, rel=1e-8)

    def test_mgf_diverges_for_phi_below_one(self):
        with pytest.raises(NonConvergenceError):
            d.mgf(P(3, 0.5), 1.0)

    def test_char_function_at_zero(self):
        assert d.char_function(P(3, 7), 0.0) == (1.0, 0.0)

    def test_char_function_exponential(self):
        re, im = d.char_function(P(1, 1), 1.0)
        assert re == pytest.approx(0.5, abs=1e-8)
        assert im == pytest.approx(0.5, abs=1e-8)

    def test_char_function_matches_quadrature(self):
        p, t = P(2.5, 1.2), 0.7
        re, im = d.char_function(p, t)
        assert re == pytest.approx(integrate(lambda y: math.cos(t * y) * d.pdf(p, y), 0, math.inf, TIGHT), abs=1e-8)
        assert im == pytest.approx(integrate(lambda y: math.sin(t * y) * d.pdf(p, y), 0, math.inf, TIGHT), abs=1e-8)

    @pytest.mark.parametrize("t", [-3.0, -0.5, 0.3, 1.0, 2.5, 6.0])
    def test_char_function_bounded(self, grid_params, t):
        re, im = d.char_function(grid_params, t)
        assert math.hypot(re, im) <= 1 + 1e-9

    def test_char_function_conjugate_symmetry(self):
        p = P(1.5, 2)
        re1, im1 = d.char_function(p, 0.8)
        re2, im2 = d.char_function(p, -0.8)
        assert re1 == pytest.approx(re2, abs=1e-12)
        assert im1 == pytest.approx(-im2, abs=1e-12)


class TestQuadratureFallbacks:
    def test_mgf_exponential_near_tail_rate(self):
        # geometric series too slow for max_terms; the quadrature path answers
        assert d.mgf(P(1, 1), 0.99) == pytest.approx(100.0, rel=1e-6)

    def test_log_mgf_rayleigh_type_large_t(self):
        t = 40.0
        expected = t * t / 4 + math.log(t * math.sqrt(math.pi) / 2 * (1 + math.erf(t / 2)))
        assert d.log_mgf(P(1, 2), t) == pytest.approx(expected, abs=1e-6)

    def test_mgf_beyond_double_range(self):
        p = P(1.5, 1.2)
        log_value = d.log_mgf(p, 5.0)
        assert 1000 < log_value < 1100
        assert d.mgf(p, 5.0) == math.inf

    def test_log_mgf_matches_series(self):
        p = P(3, 2)
        assert d.log_mgf(p, 1.0) == pytest.approx(math.log(d.mgf(p, 1.0)), rel=1e-14)

    def test_mgf_negative_t_heavy_tail(self):
        p = P(3, 0.5)
        quad = integrate(lambda y: math.exp(-2.0 * y) * d.pdf(p, y), 0, math.inf, None, (0.1, 1.0))
        assert d.mgf(p, -2.0) == pytest.approx(quad, rel=1e-7)

    def test_char_function_heavy_tail(self):
        p, t = P(50, 0.3), 2.0
        re, im = d.char_function(p, t)
        y = sample(p, 200_000, SeededStream(seed=2024))
        assert re == pytest.approx(float(np.mean(np.cos(t * y))), abs=0.01)
        assert im == pytest.approx(float(np.mean(np.sin(t * y))), abs=0.01)
        re_neg, im_neg = d.char_function(p, -t)
        assert (re_neg, im_neg) == pytest.approx((re, -im), abs=1e-12)

    def test_renyi_ill_conditioned_series(self):
        p, h = P(1e-6, 2.0), 2.0
        value = d.renyi_entropy(p, h)
        assert math.isfinite(value)
        # H_2 = -log E f(Y)
        y = sample(p, 200_000, SeededStream(seed=77))
        assert math.exp(-value) == pytest.approx(float(np.mean(d.pdf(p, y))), rel=0.02)
        integral = integrate(lambda x: math.exp(h * d.log_pdf(p, x)), 0, math.inf, TIGHT, _breaks(p))
        assert value == pytest.approx(-math.log(integral), abs=1e-7)


class TestMode:
    def test_weibull_mode(self):
        assert d.mode(P(1, 3)) == pytest.approx((2 / 3) ** (1 / 3), abs=1e-10)

    def test_mode_zero_for_small_shape(self):
        assert d.mode(P(3, 0.8)) == 0.0
        assert d.mode(P(0.5, 1.0)) == 0.0

    def test_mode_matches_grid_argmax(self):
        p = P(3, 7)
        ys = np.linspace(0, 3, 1_000_001)
        assert d.mode(p) == pytest.approx(ys[np.argmax(d.pdf(p, ys))], abs=1e-4)

    @pytest.mark.parametrize("lam,phi", [(3.0, 7.0), (1.5, 2.0), (2.5, 1.2), (3.5, 1.7), (0.5, 4.5)])
    def test_mode_is_local_maximum(self, lam, phi):
        p = P(lam, phi)
        y = d.mode(p)
        assert d.pdf(p, y - 0.01) < d.pdf(p, y)
        assert d.pdf(p, y + 0.01) < d.pdf(p, y)

    @pytest.mark.parametrize("lam,phi", [(1.5, 2.0), (2.5, 1.2), (0.5, 4.5), (9.0, 3.0)])
    def test_mode_is_stationary(self, lam, phi):
        p = P(lam, phi)
        y = d.mode(p)
        z = y**phi
        assert abs((phi - 1) - phi * z * (math.log(lam) * math.exp(-z) + 1)) / y <= 1e-8


class TestConditionalMeans:
    def test_mean_waiting_time_exponential(self):
        expected = 1 - (1 - 2 * math.exp(-1)) / (1 - math.exp(-1))
        assert d.mean_waiting_time(P(1, 1), 1.0) == pytest.approx(expected, abs=1e-10)

    def test_mean_waiting_time_large_t(self):
        p = P(1.5, 2)
        assert d.mean_waiting_time(p, 8.0) == pytest.approx(8.0 - d.raw_moment(p, 1), rel=1e-10)

    def test_mean_waiting_time_matches_quadrature(self, grid_params):
        for t in (0.25, 0.5, 1.0, 2.0):
            F = d.cdf(grid_params, t)
            if F < 1e-8:
                continue
            partial = integrate(lambda y: y * d.pdf(grid_params, y), 0, t, TIGHT)
            mwt = d.mean_waiting_time(grid_params, t)
            assert mwt == pytest.approx(t - partial / F, rel=1e-6)
            assert 0 <= mwt <= t

    def test_mean_waiting_time_degenerate(self):
        with pytest.raises(DegenerateInputError):
            d.mean_waiting_time(P(3, 7), 1e-3)

    def test_mean_residual_life_exponential(self):
        for t in (0.0, 0.5, 3.0, 10.0):
            assert d.mean_residual_life(P(1, 1), t) == pytest.approx(1.0, abs=1e-10)

    def test_mean_residual_life_at_zero(self, grid_params):
        assert d.mean_residual_life(grid_params, 0.0) == pytest.approx(d.raw_moment(grid_params, 1), abs=1e-8)

    def test_mean_residual_life_matches_quadrature(self, grid_params):
        for t in (0.25, 0.5, 1.0, 2.0):
            S = d.survival(grid_params, t)
            if S < 1e-6:
                continue
            tail = integrate(lambda y: y * d.pdf(grid_params, y), t, math.inf, TIGHT)
            mrl = d.mean_residual_life(grid_params, t)
            assert mrl == pytest.approx(tail / S - t, rel=1e-6)
            assert mrl >= 0

    def test_mean_residual_life_degenerate(self):
        with pytest.raises(DegenerateInputError):
            d.mean_residual_life(P(3, 7), 3.0)

    def test_invalid_t(self):
        with pytest.raises(DomainError):
            d.mean_waiting_time(P(3, 2), 0.0)
        with pytest.raises(DomainError):
            d.mean_residual_life(P(3, 2), -1.0)


class TestStressStrength:
    EQUAL_SHAPE = [
        ((3.0, 2.0), (2.0, 2.0)),
        ((1.0, 1.0), (3.0, 1.0)),
        ((0.5, 1.5), (2.0, 1.5)),
        ((2.0, 0.7), (0.5, 0.7)),
        ((9.0, 1.0), (1.5, 1.0)),
        ((1.5, 4.5), (1.0, 4.5)),
        ((0.2, 2.5), (0.4, 2.5)),
        ((5.0, 1.2), (1.0 + 1e-6, 1.2)),
        ((1.0 + 1e-5, 3.0), (7.0, 3.0)),
        ((3.5, 1.7), (2.5, 1.7)),
    ]

    @staticmethod
    def pair(s, q):
        return StressStrengthPair(strength=P(*s), stress=P(*q))

    def test_identical_law_is_half(self, grid_params):
        pair = StressStrengthPair(strength=grid_params, stress=grid_params)
        assert d.stress_strength(pair) == pytest.approx(0.5, abs=1e-12)

    def test_exponential_pair(self):
        assert d.stress_strength(self.pair((1, 1), (1, 1))) == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize("s,q", EQUAL_SHAPE)
    def test_closed_form_matches_quadrature(self, s, q):
        pair = self.pair(s, q)
        closed = d.stress_strength(pair, "closed_form")
        quad = d.stress_strength(pair, "quadrature", quad_cfg=TIGHT)
        assert closed == pytest.approx(quad, abs=1e-8)

    def test_reciprocal_lambdas(self):
        pair = self.pair((2.0, 1.3), (0.5, 1.3))
        assert d.stress_strength(pair) == pytest.approx(
            d.stress_strength(pair, "quadrature", quad_cfg=TIGHT), abs=1e-8
        )

    @pytest.mark.parametrize(
        "s,q", [((3.0, 2.0), (2.0, 2.0)), ((1.5, 2.0), (2.5, 1.2)), ((0.5, 4.5), (3.0, 7.0))]
    )
    def test_symmetry(self, s, q):
        total = d.stress_strength(self.pair(s, q)) + d.stress_strength(self.pair(q, s))
        assert total == pytest.approx(1.0, abs=1e-8)

    def test_closed_form_needs_equal_shapes(self):
        with pytest.raises(DomainError):
            d.stress_strength(self.pair((3, 2), (3, 1)), "closed_form")


class TestOrderStatistics:
    def test_single_observation_is_pdf(self, grid_params):
        ys = np.linspace(0.1, 3, 10)
        spec = OrderStatSpec(j=1, n=1)
        assert np.allclose(d.order_stat_pdf(grid_params, spec, ys), d.pdf(grid_params, ys), rtol=1e-14)

    def test_maximum_of_exponentials(self):
        y = np.linspace(0.1, 5, 10)
        expected = 3 * (1 - np.exp(-y)) ** 2 * np.exp(-y)
        assert np.allclose(d.order_stat_pdf(P(1, 1), OrderStatSpec(j=3, n=3), y), expected, rtol=1e-12)

    def test_normalization(self):
        p, spec = P(3, 2), OrderStatSpec(j=2, n=5)
        total = integrate(lambda y: d.order_stat_pdf(p, spec, y), 0, math.inf, TIGHT)
        assert total == pytest.approx(1.0, abs=1e-8)

    def test_cdf_matches_integrated_pdf(self):
        p, spec = P(1.5, 2), OrderStatSpec(j=4, n=7)
        quad = integrate(lambda y: d.order_stat_pdf(p, spec, y), 0, 1.2, TIGHT)
        assert d.order_stat_cdf(p, spec, 1.2) == pytest.approx(quad, abs=1e-10)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_mixture_of_order_statistics(self, grid_params, n):
        ys = np.linspace(0.05, 3, 25)
        mixture = sum(d.order_stat_pdf(grid_params, OrderStatSpec(j=j, n=n), ys) for j in range(1, n + 1)) / n
        assert np.allclose(mixture, d.pdf(grid_params, ys), rtol=1e-12, atol=1e-300)

    def test_rank_above_size(self):
        with pytest.raises(ValidationError):
            OrderStatSpec(j=4, n=3)


class TestRenyiEntropy:
    def test_exponential(self):
        assert d.renyi_entropy(P(1, 1), 2.0) == pytest.approx(math.log(2), abs=1e-10)

    def test_rayleigh_type(self):
        assert d.renyi_entropy(P(1, 2), 2.0) == pytest.approx(0.5 * math.log(8 / math.pi), abs=1e-10)

    @pytest.mark.parametrize("h", [0.5, 2.0, 3.0])
    def test_series_matches_quadrature(self, grid_params, h):
        value = d.renyi_entropy(grid_params, h, verify=True)
        integral = integrate(
            lambda y: math.exp(h * d.log_pdf(grid_params, y)), 0, math.inf, TIGHT, _breaks(grid_params)
        )
        assert math.exp((1 - h) * value) == pytest.approx(integral, rel=1e-6)

    @pytest.mark.parametrize("h", [1.0, 0.0, -0.5])
    def test_invalid_order(self, h):
        with pytest.raises(DomainError):
            d.renyi_entropy(P(3, 2), h)

    def test_divergent_integral(self):
        with pytest.raises(DomainError):
            d.renyi_entropy(P(3, 0.5), 3.0)


class TestLambdaOneReduction:
    @pytest.mark.parametrize("eps", [1e-6, -1e-6])
    def test_collapse_to_weibull(self, eps):
        near, exact = P(1 + eps, 1.7), P(1.0, 1.7)
        ys = np.linspace(0.05, 3, 30)
        assert np.allclose(d.pdf(near, ys), d.pdf(exact, ys), atol=1e-4)
        assert np.allclose(d.cdf(near, ys), d.cdf(exact, ys), atol=1e-4)
        for u in (0.1, 0.5, 0.9):
            assert d.quantile(near, u) == pytest.approx((-math.log1p(-u)) ** (1 / 1.7), abs=1e-4)
        for r in (1, 2, 3):
            assert d.raw_moment(near, r) == pytest.approx(math.gamma(r / 1.7 + 1), abs=1e-4)
