"""Closed-form BER and outage expressions against independent oracles."""

import math

import numpy as np
import pytest

from dafsc import analysis
from dafsc.analysis import (
    analytical_ber,
    angle_weights,
    ber_high_snr_approx,
    conditional_gamma_max_cdf,
    draw_combiner_snr,
    outage_probability,
    relay_branch_mean_snr,
)
from dafsc.phy import ModulationParams, PowerProfile
from dafsc.specfn import integrate_theta, scaled_e1
from oracles import oracle_ber_2d, outage_quadrature

DBPSK = ModulationParams.dbpsk()
DQPSK = ModulationParams.dqpsk()


class TestAngleWeights:
    def test_dbpsk_collapses_to_constants(self):
        theta = np.linspace(-math.pi, math.pi, 33)
        weight, snr_scale = angle_weights(theta, DBPSK)
        np.testing.assert_allclose(weight, 1.0, atol=1e-14)
        np.testing.assert_allclose(snr_scale, 1.0, atol=1e-14)

    def test_dqpsk_at_minus_half_pi(self):
        weight, snr_scale = angle_weights(-math.pi / 2.0, DQPSK)
        beta = DQPSK.beta
        want = (DQPSK.b**2 / 4.0) * (1.0 - beta) ** 2
        assert snr_scale == pytest.approx(want, rel=1e-14)
        assert weight == pytest.approx((1 - beta**2) / (1 - beta) ** 2, rel=1e-14)

    def test_dqpsk_unit_scale_at_zero(self):
        _, snr_scale = angle_weights(0.0, DQPSK)
        assert snr_scale == pytest.approx(1.0, rel=1e-14)

    @pytest.mark.parametrize("beta", [0.0, DQPSK.beta, 0.2, 0.8])
    def test_weight_integrates_to_two_pi(self, beta):
        mod = ModulationParams(order=4, a=beta * 2.0, b=2.0) if beta else DBPSK
        total = integrate_theta(lambda th: angle_weights(th, mod)[0])
        assert total == pytest.approx(2.0 * math.pi, rel=1e-10)


class TestConditionalCdf:
    def test_at_origin(self):
        assert conditional_gamma_max_cdf(0.0, 1.0, 1.0) == 0.0

    def test_limit_to_one(self):
        assert conditional_gamma_max_cdf(1e6, 1.0, 1.0) == pytest.approx(1.0)

    def test_unit_parameters_value(self):
        assert conditional_gamma_max_cdf(1.0, 1.0, 1.0) == pytest.approx(
            0.3995764008937280, rel=1e-12)

    def test_monte_carlo_crosscheck(self):
        rng = np.random.default_rng(17)
        draws = np.maximum(rng.exponential(1.0, 1_000_000),
                           rng.exponential(1.0, 1_000_000))
        mc = np.mean(draws <= 1.0)
        assert conditional_gamma_max_cdf(1.0, 1.0, 1.0) == pytest.approx(mc, abs=0.002)

    def test_nondecreasing_and_bounded(self):
        rng = np.random.default_rng(18)
        for _ in range(20):
            p0 = rng.uniform(0.1, 50.0)
            c = rng.uniform(0.01, p0)
            g = np.sort(rng.uniform(0.0, 100.0, 64))
            vals = conditional_gamma_max_cdf(g, p0, c)
            assert np.all(vals >= 0.0) and np.all(vals <= 1.0)
            assert np.all(np.diff(vals) >= 0.0)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            conditional_gamma_max_cdf(-1.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            conditional_gamma_max_cdf(1.0, 0.0, 1.0)


class TestRelayBranchMeanSnr:
    def test_bounded_by_source_power(self):
        prof = PowerProfile.from_db(20.0, 0.7)
        lam = 10.0 ** np.random.default_rng(19).uniform(-3, 3, 100)
        c = relay_branch_mean_snr(prof, lam)
        assert np.all(c > 0.0) and np.all(c < prof.p0)


class TestIntegrandTermStructure:
    def test_scaled_arguments_ordered(self):
        # the relay-average E1 argument is always below its gain offset:
        # 1/(A^2 (1 + p0 a)) < 1/A^2 and 1/(A^2 (2 + p0 a)) < 1/(2 A^2)
        rng = np.random.default_rng(23)
        theta = rng.uniform(-math.pi, math.pi, 50)
        for mod in (DBPSK, DQPSK):
            _, snr_scale = angle_weights(theta, mod)
            for _ in range(5):
                prof = PowerProfile.from_db(rng.uniform(0, 35), rng.uniform(0.1, 0.9))
                a2 = prof.amplification**2
                b_gain = 1.0 / a2
                b_arg = 1.0 / (a2 * (1.0 + prof.p0 * snr_scale))
                d_gain = 1.0 / (2.0 * a2)
                d_arg = 1.0 / (a2 * (2.0 + prof.p0 * snr_scale))
                assert np.all(b_arg > 0.0) and np.all(b_arg < b_gain)
                assert np.all(d_arg > 0.0) and np.all(d_arg < d_gain)


class TestAnalyticalBer:
    def test_dbpsk_integral_matches_collapsed_form(self):
        prof = PowerProfile.from_db(20.0, 0.7)
        p0, a2 = prof.p0, prof.amplification**2
        s, t = 1.0 + p0, 2.0 + p0
        term_direct = 1.0 / s
        term_relay = (1.0 + ((1.0 - 1.0 / s) / a2) * scaled_e1(1.0 / (a2 * s))) / s
        term_joint = (2.0 / t) * (1.0 + ((0.5 - 1.0 / t) / a2) * scaled_e1(1.0 / (a2 * t)))
        collapsed = 0.5 * (term_direct + term_relay - term_joint)
        assert analytical_ber(DBPSK, prof) == pytest.approx(collapsed, rel=1e-12)

    def test_frozen_anchor_values(self):
        # pinned after verifying against the independent 2-D quadrature
        prof = PowerProfile.from_db(20.0, 0.7)
        assert analytical_ber(DBPSK, prof) == pytest.approx(1.3329472598523e-03, rel=1e-9)
        assert analytical_ber(DQPSK, prof) == pytest.approx(4.4620059145510e-03, rel=1e-9)

    def test_agrees_with_2d_oracle(self):
        for mod in (DBPSK, DQPSK):
            prof = PowerProfile.from_db(25.0, 0.7)
            assert analytical_ber(mod, prof) == pytest.approx(
                oracle_ber_2d(mod, prof), rel=1e-8)

    def test_vanishing_power_limit(self):
        prof = PowerProfile(total_power=1e-12, q=0.5)
        assert analytical_ber(DBPSK, prof) == pytest.approx(0.5, abs=1e-6)

    def test_monotone_in_power(self):
        for mod in (DBPSK, DQPSK):
            vals = [analytical_ber(mod, PowerProfile.from_db(p, 0.7))
                    for p in np.arange(0.0, 40.1, 2.5)]
            assert np.all(np.diff(vals) < 0.0)

    def test_quaternary_harder_than_binary(self):
        for p_db in np.arange(10.0, 30.1, 5.0):
            prof = PowerProfile.from_db(p_db, 0.7)
            assert analytical_ber(DQPSK, prof) > analytical_ber(DBPSK, prof)

    def test_result_in_valid_range(self):
        rng = np.random.default_rng(20)
        for _ in range(10):
            prof = PowerProfile.from_db(rng.uniform(-5, 35), rng.uniform(0.1, 0.9))
            v = analytical_ber(DBPSK, prof)
            assert 0.0 < v <= 0.5 + 1e-12


class TestHighSnrApprox:
    def test_slope_near_two(self):
        for mod in (DBPSK, DQPSK):
            a30 = ber_high_snr_approx(mod, PowerProfile.from_db(30.0, 0.7))
            a40 = ber_high_snr_approx(mod, PowerProfile.from_db(40.0, 0.7))
            slope = -(math.log10(a40) - math.log10(a30))
            assert 1.9 <= slope <= 2.05

    def test_positive(self):
        for p_db in (0.0, 15.0, 35.0):
            assert ber_high_snr_approx(DBPSK, PowerProfile.from_db(p_db, 0.7)) > 0.0

    def test_tracks_below_exact_curve(self):
        prof = PowerProfile.from_db(35.0, 0.7)
        for mod in (DBPSK, DQPSK):
            assert ber_high_snr_approx(mod, prof) <= analytical_ber(mod, prof)


class TestOutage:
    def test_zero_threshold(self):
        assert outage_probability(0.0, PowerProfile.from_db(10.0, 0.7)) == 0.0

    def test_large_gain_limit(self):
        prof = PowerProfile(total_power=20.0, q=0.5, amplification=1e8)
        want = (1.0 - math.exp(-1.0 / prof.p0)) ** 2
        assert outage_probability(1.0, prof) == pytest.approx(want, rel=1e-6)

    def test_frozen_anchor(self):
        prof = PowerProfile(total_power=20.0, q=0.5, amplification=1.0)
        assert outage_probability(1.0, prof) == pytest.approx(
            0.029156066082801538, rel=1e-10)

    def test_monte_carlo_crosscheck(self):
        prof = PowerProfile(total_power=20.0, q=0.5, amplification=1.0)
        rng = np.random.default_rng(21)
        draws = draw_combiner_snr(prof, 10_000_000, rng)
        mc = float(np.mean(draws <= 1.0))
        se = math.sqrt(mc * (1.0 - mc) / draws.size)
        assert abs(outage_probability(1.0, prof) - mc) <= 3.0 * se

    def test_quadrature_crosscheck(self):
        rng = np.random.default_rng(22)
        for _ in range(6):
            prof = PowerProfile(total_power=rng.uniform(1.0, 100.0),
                                q=rng.uniform(0.2, 0.8),
                                amplification=rng.uniform(0.3, 3.0))
            g = rng.uniform(0.05, 20.0)
            assert outage_probability(g, prof) == pytest.approx(
                outage_quadrature(g, prof), rel=1e-8)

    def test_nondecreasing_in_threshold(self):
        prof = PowerProfile.from_db(15.0, 0.7)
        g = np.linspace(0.0, 50.0, 101)
        vals = outage_probability(g, prof)
        assert np.all(np.diff(vals) >= 0.0)
        assert np.all((vals >= 0.0) & (vals <= 1.0))

    def test_domain_error(self):
        with pytest.raises(ValueError):
            outage_probability(-0.5, PowerProfile.from_db(10.0, 0.5))

    def test_snr_draws_deterministic(self):
        prof = PowerProfile.from_db(10.0, 0.7)
        a = draw_combiner_snr(prof, 1000, np.random.default_rng(5))
        b = draw_combiner_snr(prof, 1000, np.random.default_rng(5))
        np.testing.assert_array_equal(a, b)
