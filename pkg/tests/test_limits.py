import math

import mpmath
import numpy as np
import pytest
import scipy.integrate
from hypothesis import given, settings
from hypothesis import strategies as st

from spintrace.dynamics import ModelParams, f_and_g, rho14_ratio, rho14_sigma_bath
from spintrace.limits import (QuadratureError, QuadratureSpec, c_infinity, coherent_phase, erfcx, f_asymptote,
                              f_infinite_n, gaussian_envelope)


def f_direct(lam, gamma, t):
    """The x-form integral done by adaptive quadrature, no variable change."""
    def integrand(x):
        w2 = 4 * lam**2 + 2 * gamma**2 * x**2
        return x**2 * np.exp(-2 * x**2) * np.sin(t * np.sqrt(w2)) ** 2 / w2
    val, _ = scipy.integrate.quad(integrand, -np.inf, np.inf, limit=500, epsabs=1e-13)
    return 4 * gamma**2 * math.sqrt(2 / math.pi) * val


def averaged_f(lam, gamma):
    """Time average: sin^2 -> 1/2 under the integral."""
    def integrand(x):
        return x**2 * np.exp(-2 * x**2) / (4 * lam**2 + 2 * gamma**2 * x**2)
    val, _ = scipy.integrate.quad(integrand, -np.inf, np.inf, epsabs=1e-14, epsrel=1e-13)
    return 2 * gamma**2 * math.sqrt(2 / math.pi) * val


class TestGaussianEnvelope:
    def test_examples(self):
        p = ModelParams(gamma=2, h=1, beta=1, n_bath=100)
        assert gaussian_envelope(p, 0.0) == 1
        assert gaussian_envelope(p, 1.0) == pytest.approx(math.exp(-4 / math.cosh(0.5) ** 2), rel=1e-15)
        assert gaussian_envelope(p, 1.0) == pytest.approx(0.0431, abs=1e-4)
        assert gaussian_envelope(p.with_(h=1e4), 3.0) == 1

    def test_matches_finite_n(self):
        p = ModelParams(gamma=2, h=1, beta=1, n_bath=100)
        t = np.linspace(0, 1.5, 301)
        assert np.max(np.abs(np.abs(rho14_ratio(p, t)) - gaussian_envelope(p, t))) <= 1e-3

    def test_wrong_regime(self):
        with pytest.raises(ValueError):
            gaussian_envelope(ModelParams(bath_type="sigmaz"), 1.0)
        with pytest.raises(ValueError):
            gaussian_envelope(ModelParams(scaling="linearn"), 1.0)


class TestCoherentPhase:
    P = ModelParams(mu=1, gamma=2, h=2, beta=1, bath_type="sigmaz", scaling="linearn")

    def test_examples(self):
        assert coherent_phase(self.P, 0.0) == 1
        q = self.P.with_(h=0, mu=0)
        np.testing.assert_array_equal(coherent_phase(q, np.linspace(0, 5, 6)), 1)
        assert coherent_phase(self.P, 0.5) == pytest.approx(np.exp(0.5j * (4 - 4 * math.tanh(1))), abs=1e-15)

    def test_unit_modulus(self):
        np.testing.assert_allclose(np.abs(coherent_phase(self.P, np.linspace(0, 50, 101))), 1, atol=1e-15)

    @pytest.mark.parametrize("mu, gamma, hb", [(1, 2, 2), (0, 1, 2), (-0.5, 1.5, -1), (0.3, -1.5, 0.7)])
    def test_is_limit_of_finite_n(self, mu, gamma, hb):
        p = ModelParams(mu=mu, gamma=gamma, h=hb, beta=1, n_bath=10**5, bath_type="sigmaz", scaling="linearn")
        t = np.linspace(0, 5, 51)
        assert np.max(np.abs(rho14_sigma_bath(p, t) - coherent_phase(p, t))) <= 1e-3

    def test_wrong_regime(self):
        with pytest.raises(ValueError):
            coherent_phase(self.P.with_(scaling="sqrtn"), 1.0)


class TestQuadratureSpec:
    @pytest.mark.parametrize("n", [16, 64, 256, 1024])
    def test_gaussian_mass(self, n):
        u, w = QuadratureSpec(n).rule()
        assert w.sum() == pytest.approx(math.sqrt(math.pi), abs=1e-13)
        assert np.sum(w * u**2) == pytest.approx(math.sqrt(math.pi) / 2, abs=1e-13)

    def test_rejects(self):
        with pytest.raises(ValueError):
            QuadratureSpec(8)
        with pytest.raises(ValueError):
            QuadratureSpec(64, kind="laguerre")

    def test_for_time(self):
        assert QuadratureSpec.for_time(1, 0).node_count == 64
        assert QuadratureSpec.for_time(1, 5).node_count == 128
        assert QuadratureSpec.for_time(2, 20).node_count == 512

    def test_tables_are_read_only(self):
        u, _ = QuadratureSpec(32).rule()
        with pytest.raises(ValueError):
            u[0] = 1.0


class TestFInfiniteN:
    def test_trivial(self):
        assert f_infinite_n(2, 1, 0.0) == 0
        assert f_infinite_n(2, 0, 3.0) == 0

    @pytest.mark.parametrize("lam, gamma, t", [(2, 1, 0.7), (2, 1, 4.0), (0.5, 2, 3.3), (0, 1, 2.0), (1, 3, 9.0)])
    def test_against_adaptive_quadrature(self, lam, gamma, t):
        assert f_infinite_n(lam, gamma, t) == pytest.approx(f_direct(lam, gamma, t), abs=1e-9)

    def test_no_xy_coupling_closed_form(self):
        # lam = 0: f = 2 E[sin^2(gamma t u)] = 1 - exp(-gamma^2 t^2)
        for t in (0.3, 1.0, 2.5):
            assert f_infinite_n(0, 1.3, t) == pytest.approx(1 - math.exp(-(1.3 * t) ** 2), abs=1e-10)

    def test_self_convergence(self):
        for t in np.linspace(0, 5, 11):
            val, spec = f_infinite_n(2, 1, t, return_spec=True)
            assert abs(f_infinite_n(2, 1, t, quad=spec.doubled()) - val) <= 1e-9

    def test_finite_n_agreement(self):
        p = ModelParams(lam=2, gamma=1, n_bath=100)
        worst = max(abs(f_and_g(p, t)[0].real - f_infinite_n(2, 1, t)) for t in np.linspace(0, 5, 101))
        assert worst <= 0.02

    def test_long_time_mean(self):
        mean = np.mean([f_infinite_n(2, 1, t) for t in np.linspace(50, 60, 400)])
        assert mean == pytest.approx(0.02870, abs=1e-4)

    def test_nonconvergence_raises(self):
        with pytest.raises(QuadratureError):
            f_infinite_n(2, 1, 40.0, quad=QuadratureSpec(16), tol=0.0, max_nodes=64)

    @settings(max_examples=40, deadline=None)
    @given(lam=st.floats(-3, 3), gamma=st.floats(-3, 3), t=st.floats(0, 10))
    def test_range(self, lam, gamma, t):
        assert 0 <= f_infinite_n(lam, gamma, t) <= 2 + 1e-12


class TestErfcx:
    def test_examples(self):
        assert erfcx(0.0) == 1
        assert erfcx(4.0) == pytest.approx(0.1369994576250614, rel=1e-14)

    def test_against_mpmath(self):
        mpmath.mp.dps = 40
        for x in np.concatenate([np.linspace(0, 5, 41), [7.5, 12.0, 30.0, 1e3]]):
            ref = mpmath.exp(mpmath.mpf(x) ** 2) * mpmath.erfc(mpmath.mpf(x))
            assert erfcx(x) == pytest.approx(float(ref), rel=1e-12)

    def test_asymptotic_series(self):
        x = 20.0
        series = (1 - 1 / (2 * x**2) + 3 / (4 * x**4) - 15 / (8 * x**6)) / (x * math.sqrt(math.pi))
        assert erfcx(x) == pytest.approx(series, abs=1e-10)


class TestAsymptote:
    def test_examples(self):
        assert f_asymptote(0, 1) == 1
        assert c_infinity(0, 3) == 0
        assert f_asymptote(2, 1) == pytest.approx(0.02870, abs=1e-5)
        assert c_infinity(2, 1) == pytest.approx(0.9713, abs=1e-4)
        assert f_asymptote(1e3, 1) == pytest.approx(0, abs=1e-6)
        assert c_infinity(2, 1e6) == pytest.approx(0, abs=1e-5)

    @pytest.mark.parametrize("lam, gamma", [(2, 1), (1, 1), (0.3, 2), (5, 0.5), (1, -2)])
    def test_matches_time_averaged_integral(self, lam, gamma):
        assert f_asymptote(lam, gamma) == pytest.approx(averaged_f(lam, gamma), abs=1e-10)

    def test_gamma_zero(self):
        with pytest.raises(ValueError):
            f_asymptote(1, 0)
        with pytest.raises(ValueError):
            c_infinity(1, 0)

    def test_large_ratio_no_overflow(self):
        # naive exp(x^2) erfc(x) overflows here
        assert np.isfinite(c_infinity(6e3, 1))
        assert c_infinity(60, 1) == pytest.approx(1 - 1 / (8 * 60**2), abs=1e-6)

    def test_sum_identity(self):
        for r in np.linspace(0, 50, 201):
            assert c_infinity(r, 1) + f_asymptote(r, 1) == pytest.approx(1, abs=1e-14)
            assert 0 <= c_infinity(r, 1) <= 1

    def test_monotone(self):
        lams = np.linspace(0, 10, 100)
        cs = [c_infinity(v, 2) for v in lams]
        assert all(b > a for a, b in zip(cs, cs[1:]))
        gammas = np.linspace(0.05, 20, 100)
        cs = [c_infinity(2, g) for g in gammas]
        assert all(b < a for a, b in zip(cs, cs[1:]))
