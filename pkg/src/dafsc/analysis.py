"""Closed-form performance analysis of the selection-combining receiver.

Exact average bit error rate, its high-power diversity approximation, and
the outage probability of the combiner output SNR, all in linear power
units.  The average BER comes from the conditional differential-detection
error integral, averaged in closed form over the exponential direct-branch
SNR and the (conditionally exponential) relayed-branch SNR, leaving a
single smooth integral over the angle variable that is evaluated by
deterministic adaptive quadrature.

The relayed-branch average introduces exponential-integral terms; they are
evaluated through the exponentially scaled E1 so nothing blows up when the
relay gain is large or the power is high.
"""

import math

import numpy as np

from .phy import ModulationParams, PowerProfile
from .specfn import (
    QuadratureSpec,
    bessel_k1_scaled,
    integrate_theta,
    scaled_e1,
)


def angle_weights(theta, mod: ModulationParams):
    """Angular weight and SNR scale of the conditional bit-error integrand.

    For the differential detector the conditional bit error probability
    given an instantaneous SNR ``gamma`` equals the average over theta in
    [-pi, pi] of ``weight(theta) * exp(-snr_scale(theta) * gamma) / (4 pi)``.
    Returns the pair (weight, snr_scale), vectorized over ``theta``.
    """
    theta = np.asarray(theta, dtype=np.float64)
    beta = mod.beta
    sin_t = np.sin(theta)
    weight = (1.0 - beta**2) / (1.0 + 2.0 * beta * sin_t + beta**2)
    snr_scale = (mod.b**2 / (2.0 * mod.bits_per_symbol)) * (
        1.0 + beta**2 + 2.0 * beta * sin_t
    )
    return weight, snr_scale


def relay_branch_mean_snr(profile: PowerProfile, h_rd_gain):
    """Mean SNR of the relayed branch conditioned on the relay-destination
    power gain |h_rd|^2 (the branch SNR is exponential with this mean)."""
    a2 = profile.amplification**2
    lam = np.asarray(h_rd_gain, dtype=np.float64)
    return a2 * profile.p0 * lam / (1.0 + a2 * lam)


def conditional_gamma_max_cdf(gamma, p0: float, c: float):
    """CDF of the combiner output SNR given the relayed branch mean ``c``.

    Both branch SNRs are conditionally exponential (means ``p0`` and
    ``c``), so the maximum has CDF (1 - exp(-g/p0)) (1 - exp(-g/c)).
    """
    if not (p0 > 0.0 and c > 0.0):
        raise ValueError("p0 and c must be > 0")
    g = np.asarray(gamma, dtype=np.float64)
    if g.size and np.min(g) < 0.0:
        raise ValueError("gamma must be >= 0")
    out = (1.0 - np.exp(-g / p0)) * (1.0 - np.exp(-g / c))
    return float(out) if out.ndim == 0 else out


def _ber_integrand(theta, mod: ModulationParams, profile: PowerProfile):
    weight, snr_scale = angle_weights(theta, mod)
    p0 = profile.p0
    a2 = profile.amplification**2
    s = p0 * snr_scale + 1.0
    t = p0 * snr_scale + 2.0

    term_direct = 1.0 / s
    relay_gain = (1.0 - 1.0 / s) / a2
    term_relay = (1.0 + relay_gain * scaled_e1(1.0 / (a2 * s))) / s
    joint_gain = (0.5 - 1.0 / t) / a2
    term_joint = (2.0 / t) * (1.0 + joint_gain * scaled_e1(1.0 / (a2 * t)))

    return weight * (term_direct + term_relay - term_joint)


def analytical_ber(
    mod: ModulationParams,
    profile: PowerProfile,
    quad: QuadratureSpec | None = None,
) -> float:
    """Exact average bit error rate of the selection combiner.

    Deterministic for a fixed quadrature spec; the value lies in
    (0, 1/2] and tends to 1/2 as the powers vanish.
    """
    value = integrate_theta(lambda th: _ber_integrand(th, mod, profile), quad)
    return value / (4.0 * math.pi)


def ber_high_snr_approx(
    mod: ModulationParams,
    profile: PowerProfile,
    quad: QuadratureSpec | None = None,
) -> float:
    """High-power BER approximation exhibiting the diversity slope of two.

    Replaces both averaged branch terms by their dominant rational parts,
    which collapses the integrand to
    2 weight / ((1 + scale p0)(2 + scale p0)); the result decays like
    1/p0^2 (up to the logarithmic factor present in the exact curve).
    """
    p0 = profile.p0

    def integrand(theta):
        weight, snr_scale = angle_weights(theta, mod)
        return weight * 2.0 / ((1.0 + snr_scale * p0) * (2.0 + snr_scale * p0))

    return integrate_theta(integrand, quad) / (4.0 * math.pi)


def outage_probability(gamma_th, profile: PowerProfile):
    """Probability that the combiner output SNR falls below ``gamma_th``.

    Averaging the conditional max-SNR CDF over the exponential
    relay-destination power gain gives the closed form
    (1 - e^(-g/p0)) * (1 - e^(-g/p0) * x K1(x)),  x = sqrt(4 g / (A^2 p0)).
    Vectorized over ``gamma_th``; returns values in [0, 1].
    """
    g = np.asarray(gamma_th, dtype=np.float64)
    if g.size and np.min(g) < 0.0:
        raise ValueError("gamma_th must be >= 0")
    p0 = profile.p0
    a2 = profile.amplification**2
    out = np.empty(g.shape if g.ndim else (1,))
    flat_g = np.atleast_1d(g)
    for i, gi in enumerate(flat_g):
        if gi == 0.0:
            out.flat[i] = 0.0
            continue
        x = math.sqrt(4.0 * gi / (a2 * p0))
        # x*K1(x) in scaled form: exp(-x) * (x * exp(x) K1(x))
        xk1 = x * bessel_k1_scaled(x) * math.exp(-x)
        out.flat[i] = (1.0 - math.exp(-gi / p0)) * (1.0 - math.exp(-gi / p0) * xk1)
    return float(out[0]) if g.ndim == 0 else out.reshape(g.shape)


def draw_combiner_snr(
    profile: PowerProfile, size: int, rng: np.random.Generator
) -> np.ndarray:
    """Monte Carlo draws of the combiner output SNR.

    Draws the three link power gains as unit-mean exponentials, forms the
    direct-branch SNR p0*|h_sd|^2 and the relayed-branch SNR c*|h_sr|^2
    with c the conditional mean from :func:`relay_branch_mean_snr`, and
    returns their maximum.  Used as the sampling oracle for the outage
    closed form.
    """
    g_sd = rng.exponential(1.0, size)
    g_sr = rng.exponential(1.0, size)
    g_rd = rng.exponential(1.0, size)
    gamma_direct = profile.p0 * g_sd
    gamma_relay = relay_branch_mean_snr(profile, g_rd) * g_sr
    return np.maximum(gamma_direct, gamma_relay)


__all__ = [
    "angle_weights",
    "relay_branch_mean_snr",
    "conditional_gamma_max_cdf",
    "analytical_ber",
    "ber_high_snr_approx",
    "outage_probability",
    "draw_combiner_snr",
]
