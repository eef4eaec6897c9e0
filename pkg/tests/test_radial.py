"""Radial reduction engine vs closed forms, sphere-integral quadrature, and
the brute-force tensor oracle."""

import math

import mpmath
import numpy as np
import pytest

from monokernels.clifford import paravector
from monokernels.errors import DomainError, OracleRefusalError
from monokernels.radial import (
    RadialPair,
    RadialProfile,
    RadialQuadrature,
    ball_indicator,
    bergman_halfspace,
    bergman_weight,
    exp_decay,
    radial_integral,
    radial_integral_with_error,
    sphere_scalar_factor,
    sphere_vector_factor,
    tensor_oracle,
    tensor_oracle_with_error,
)

ZETA3 = 1.2020569031595943  # Apery's constant, cross-checked below


def test_zeta3_constant_is_right():
    mpmath.mp.dps = 25
    assert ZETA3 == pytest.approx(float(mpmath.zeta(3)), abs=1e-15)


class TestSphereFactors:
    def test_values_at_zero_are_sphere_areas(self):
        assert sphere_scalar_factor(2, 0.0) == pytest.approx(2 * math.pi, rel=1e-14)
        assert sphere_scalar_factor(3, 0.0) == pytest.approx(4 * math.pi, rel=1e-14)
        for m in (1, 2, 3, 4):
            assert sphere_vector_factor(m, 0.0) == 0.0

    def test_circle_quadrature_oracle(self):
        # integral_0^{2pi} e^{i t cos(theta)} dtheta, real part
        theta = 2 * math.pi * np.arange(4096) / 4096
        for t in (0.5, 1.0, 2.7, 8.0):
            ref_s = np.mean(np.cos(t * np.cos(theta))) * 2 * math.pi
            assert sphere_scalar_factor(2, t) == pytest.approx(ref_s, abs=1e-12)
            # vector factor: imaginary part of integral e^{it cos} cos(theta)
            ref_v = np.mean(np.sin(t * np.cos(theta)) * np.cos(theta)) * 2 * math.pi
            assert sphere_vector_factor(2, t) == pytest.approx(ref_v, abs=1e-12)

    def test_sphere_quadrature_oracle_m3(self):
        # polar quadrature of integral_{S^2} e^{i t <e3, xi'>} dsigma
        ct, wct = np.polynomial.legendre.leggauss(200)
        for t in (0.5, 2.0):
            ref_s = 2 * math.pi * np.sum(wct * np.cos(t * ct))
            assert sphere_scalar_factor(3, t) == pytest.approx(ref_s, abs=1e-12)
            ref_v = 2 * math.pi * np.sum(wct * np.sin(t * ct) * ct)
            assert sphere_vector_factor(3, t) == pytest.approx(ref_v, abs=1e-12)

    def test_one_dimensional_forms(self):
        for t in (0.0, 0.7, 3.0):
            assert sphere_scalar_factor(1, t) == pytest.approx(2 * math.cos(t), abs=1e-14)
            assert sphere_vector_factor(1, t) == pytest.approx(2 * math.sin(t), abs=1e-14)

    def test_vector_factor_is_scalar_factor_derivative(self):
        # svf(m, t) = -d/dt ssf(m, t), by the scaled-Bessel derivative identity
        h = 1e-4
        for m in (2, 3):
            for t in (0.5, 1.5, 4.0):
                lhs = -(sphere_scalar_factor(m, t + h) - sphere_scalar_factor(m, t - h)) / (2 * h)
                assert abs(lhs - sphere_vector_factor(m, t)) <= 1e-6


class TestProfiles:
    def test_weight_values(self):
        assert bergman_weight(1.0).weight(np.array([0.0]))[0] == pytest.approx(0.5)
        assert bergman_weight(2.0).weight(np.array([1e-12]))[0] == pytest.approx(0.25)
        assert exp_decay(3.0).weight(np.array([2.0]))[0] == pytest.approx(math.exp(-6.0))
        assert ball_indicator(2.0).weight(np.array([1.9, 2.1])).tolist() == [1.0, 0.0]
        r = np.array([0.5])
        assert bergman_halfspace(1.5).weight(r)[0] == pytest.approx(2 * 0.5 * math.exp(-1.5))

    def test_log_weight_consistency(self):
        r = np.linspace(0.05, 20.0, 50)
        for prof in (exp_decay(1.3), bergman_weight(0.8), bergman_halfspace(1.1)):
            assert np.allclose(np.exp(prof.log_weight(r)), prof.weight(r), rtol=1e-12)

    def test_tail_majorant_actually_majorizes(self):
        r = np.linspace(1.0, 40.0, 100)
        for prof in (exp_decay(2.0), bergman_weight(1.0), bergman_halfspace(1.0)):
            const, power = prof.tail_majorant(1.0)
            bound = const * r**power * np.exp(-prof.decay_rate * r)
            assert np.all(prof.weight(r) <= bound * (1 + 1e-12))

    def test_parameter_validation(self):
        with pytest.raises(DomainError):
            exp_decay(0.0)
        with pytest.raises(DomainError):
            ball_indicator(-1.0)
        with pytest.raises(DomainError):
            RadialProfile("gaussian", 1.0)

    def test_pair_is_frozen(self):
        pair = RadialPair(1.0, 2.0)
        with pytest.raises(AttributeError):
            pair.s = 3.0


class TestClosedFormValues:
    @pytest.mark.parametrize("a", [0.5, 1.0])
    def test_strip_hardy_diagonal(self, a):
        # (2pi)^{-2} * 2pi * int_0^inf r e^{-2ar} dr = 1/(8 pi a^2)
        pair = radial_integral(2, exp_decay(2 * a), (0.0, 0.0), 0.0)
        assert pair.s == pytest.approx(1.0 / (8 * math.pi * a * a), rel=1e-10)
        assert pair.v == 0.0

    @pytest.mark.parametrize("a", [0.5, 1.0])
    def test_strip_bergman_diagonal(self, a):
        # geometric expansion of r/sinh(2ar) gives 7 zeta(3) / (32 pi a^3)
        pair = radial_integral(2, bergman_weight(a), (0.0, 0.0), 0.0)
        assert pair.s == pytest.approx(7 * ZETA3 / (32 * math.pi * a**3), rel=1e-10)

    def test_ball_volume_values(self):
        # e(0, xi) = 1, so the integral is the ball volume over (2pi)^m
        pair2 = radial_integral(2, ball_indicator(math.pi), (0.0, 0.0), 0.0)
        assert pair2.s == pytest.approx(math.pi / 4.0, rel=1e-12)
        pair3 = radial_integral(3, ball_indicator(math.pi), (0.0, 0.0), 0.0)
        assert pair3.s == pytest.approx(math.pi / 6.0, rel=1e-12)

    @pytest.mark.parametrize("m", [2, 3])
    def test_single_channel_reproduces_cauchy_kernel(self, m):
        # (2pi)^{-m} int e^{-u0 |xi|} chi_+ e^{i<u,xi>} = (u0 - u_vec)/(2 sigma_m |u|^{m+1})
        u0, t = 0.7, 1.3
        sigma_m = {2: 2 * math.pi, 3: math.pi**2}[m]
        quad = RadialQuadrature(m, exp_decay(u0), channel_weights=(1.0, 0.0))
        s_mat, v_mat, err = quad.evaluate_grid(np.array([0.0]), np.array([t]))
        denom = 2 * sigma_m * (u0**2 + t**2) ** ((m + 1) / 2.0)
        assert s_mat[0, 0] == pytest.approx(u0 / denom, rel=1e-10)
        assert v_mat[0, 0] == pytest.approx(-t / denom, rel=1e-10)
        assert err <= 1e-10

    def test_one_dimensional_against_trapezoid(self):
        pair = radial_integral(1, exp_decay(1.0), (-0.3, 0.3), 0.9)
        xs = np.linspace(-60, 60, 2_000_001)
        w = np.exp(-np.abs(xs))
        e_plus = w * np.exp(-0.3 * np.abs(xs))
        e_minus = w * np.exp(0.3 * np.abs(xs))
        phase = np.exp(1j * 0.9 * xs)
        dx = xs[1] - xs[0]
        s_ref = np.trapezoid(0.5 * (e_plus + e_minus) * phase, dx=dx).real / (2 * math.pi)
        v_ref = np.trapezoid(1j * np.sign(xs) * 0.5 * (e_plus - e_minus) * phase, dx=dx).real / (
            2 * math.pi
        )
        assert pair.s == pytest.approx(s_ref, abs=5e-9)
        assert pair.v == pytest.approx(v_ref, abs=5e-9)


class TestEngineBehavior:
    def test_vector_channel_vanishes_at_zero_frequency(self):
        for prof in (exp_decay(2.0), bergman_weight(1.0)):
            pair = radial_integral(2, prof, (-0.5, 0.5), 0.0)
            assert pair.v == 0.0

    def test_strip_condition_error_names_the_condition(self):
        with pytest.raises(DomainError, match="strip condition"):
            radial_integral(2, bergman_weight(1.0), (2.5, -2.5), 1.0)
        with pytest.raises(DomainError, match="strip condition"):
            radial_integral(2, exp_decay(1.0), (-0.2, 1.0), 0.5)

    def test_error_estimate_is_honest(self):
        rng = np.random.default_rng(5)
        for _ in range(6):
            m = int(rng.integers(2, 4))
            x0 = float(rng.uniform(-0.8, 0.8))
            unorm = float(rng.uniform(0.0, 3.0))
            prof = (exp_decay(2.0), bergman_weight(1.0))[int(rng.integers(0, 2))]
            p1, e1 = radial_integral_with_error(m, prof, (-x0, x0), unorm, tol=1e-8)
            p2, _ = radial_integral_with_error(m, prof, (-x0, x0), unorm, tol=5e-9)
            assert abs(p1.s - p2.s) <= e1
            assert abs(p1.v - p2.v) <= e1

    def test_grid_evaluation_matches_pointwise(self):
        offsets = np.array([-0.4, 0.0, 0.6])
        unorms = np.array([0.0, 0.9, 2.2])
        quad = RadialQuadrature(2, bergman_weight(1.0))
        s_mat, v_mat, err = quad.evaluate_grid(offsets, unorms)
        assert err <= 1e-10
        for i, off in enumerate(offsets):
            for j, un in enumerate(unorms):
                ref = radial_integral(2, bergman_weight(1.0), (-off, off), float(un))
                assert s_mat[i, j] == pytest.approx(ref.s, abs=1e-9)
                assert v_mat[i, j] == pytest.approx(ref.v, abs=1e-9)

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            radial_integral(5, exp_decay(1.0), (0.0, 0.0), 0.0)
        with pytest.raises(DomainError):
            radial_integral(2, exp_decay(1.0), (0.0, 0.0), -1.0)
        with pytest.raises(DomainError):
            RadialQuadrature(2, "not a profile")


class TestTensorOracle:
    def test_matches_engine_on_random_configs(self):
        rng = np.random.default_rng(9)
        profiles = [exp_decay(2.0), bergman_weight(1.0), bergman_halfspace(1.0), ball_indicator(math.pi)]
        for prof in profiles:
            for _ in range(2):
                x0 = float(rng.uniform(-0.7, 0.7))
                u = rng.uniform(-1.2, 1.2, 2)
                pair, gerr = tensor_oracle_with_error(2, prof, paravector(x0, 0.0, 0.0), u)
                ref = radial_integral(2, prof, (-x0, x0), float(np.linalg.norm(u)))
                tol = max(1e-6, gerr)
                assert abs(pair.s - ref.s) <= tol
                assert abs(pair.v - ref.v) <= tol

    def test_matches_engine_m3_smooth_profile(self):
        pair, gerr = tensor_oracle_with_error(
            3, bergman_weight(1.0), paravector(0.35, 0, 0, 0), np.array([0.5, -0.8, 0.3])
        )
        ref = radial_integral(3, bergman_weight(1.0), (-0.35, 0.35), float(np.linalg.norm([0.5, -0.8, 0.3])))
        assert abs(pair.s - ref.s) <= max(1e-6, gerr)
        assert abs(pair.v - ref.v) <= max(1e-6, gerr)

    def test_zero_frequency_vector_channel(self):
        pair = tensor_oracle(2, exp_decay(2.0), paravector(0.3, 0, 0), np.zeros(2))
        assert pair.v == 0.0

    def test_ball_value(self):
        pair = tensor_oracle(2, ball_indicator(math.pi), paravector(0.0, 0, 0), np.zeros(2))
        assert pair.s == pytest.approx(math.pi / 4.0, rel=1e-9)

    def test_refuses_oversized_grids(self):
        with pytest.raises(OracleRefusalError):
            tensor_oracle(2, exp_decay(2.0), paravector(0.0, 0, 0), np.array([60.0, 0.0]))
        with pytest.raises(OracleRefusalError):
            tensor_oracle(4, exp_decay(2.0), paravector(0.0, 0, 0, 0, 0), np.zeros(4))

    def test_divergent_configuration_raises(self):
        with pytest.raises(DomainError):
            tensor_oracle(2, exp_decay(1.0), paravector(1.5, 0, 0), np.zeros(2))
