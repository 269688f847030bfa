"""Correlated Rayleigh fading and complex white Gaussian noise generation.

Channel taps are produced by a sum-of-sinusoids synthesizer with randomized
arrival angles and phases, giving zero-mean, unit-variance complex Gaussian
processes whose autocorrelation follows the classical land-mobile model
J0(2*pi*fd*Ts*n).  Distinct seeds give statistically independent processes,
which is how the source-destination, source-relay and relay-destination
links are kept spatially uncorrelated.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from ._backend import compile_kernel

# resynchronize the cosine recurrence often enough that rounding drift
# stays below ~1e-10 of the unit tap amplitude
_RESYNC = 8192


@dataclass(frozen=True)
class FadingConfig:
    """Parameters of one fading process.

    ``normalized_doppler`` is the Doppler shift times the symbol period
    (cycles per sample); zero gives a static channel.  ``num_sinusoids``
    is the sum-of-sinusoids order per quadrature arm.
    """

    normalized_doppler: float = 0.001
    num_sinusoids: int = 16
    seed: int | None = None

    def __post_init__(self):
        if not (0.0 <= self.normalized_doppler < 0.5):
            raise ValueError("normalized_doppler must lie in [0, 0.5)")
        if self.num_sinusoids < 8:
            raise ValueError("num_sinusoids must be >= 8")


def _sos_taps_numpy_impl(length, w_d, cos_alpha, sin_alpha, phi, psi):
    k = np.arange(length, dtype=np.float64)
    re = np.zeros(length)
    im = np.zeros(length)
    for n in range(cos_alpha.shape[0]):
        re += np.cos(w_d * cos_alpha[n] * k + phi[n])
        im += np.cos(w_d * sin_alpha[n] * k + psi[n])
    scale = 1.0 / math.sqrt(cos_alpha.shape[0])
    return scale * (re + 1j * im)


def _sos_taps_numba_impl(length, w_d, cos_alpha, sin_alpha, phi, psi):
    re = np.zeros(length)
    im = np.zeros(length)
    n_osc = cos_alpha.shape[0]
    for n in range(n_osc):
        for arm in range(2):
            if arm == 0:
                omega = w_d * cos_alpha[n]
                phase = phi[n]
                out = re
            else:
                omega = w_d * sin_alpha[n]
                phase = psi[n]
                out = im
            # two-term cosine recurrence, restarted every _RESYNC samples
            # to keep rounding drift bounded
            two_cos = 2.0 * math.cos(omega)
            k = 0
            while k < length:
                c_prev = math.cos(omega * k + phase)
                out[k] += c_prev
                if k + 1 >= length:
                    break
                c_cur = math.cos(omega * (k + 1) + phase)
                out[k + 1] += c_cur
                stop = min(k + _RESYNC, length)
                for j in range(k + 2, stop):
                    c_next = two_cos * c_cur - c_prev
                    out[j] += c_next
                    c_prev = c_cur
                    c_cur = c_next
                k = stop
    scale = 1.0 / math.sqrt(n_osc)
    result = np.empty(length, dtype=np.complex128)
    for j in range(length):
        result[j] = complex(re[j] * scale, im[j] * scale)
    return result


_sos_taps_numba = compile_kernel(_sos_taps_numba_impl)


def _draw_angles(num_sinusoids, rng):
    theta = rng.uniform(-np.pi, np.pi)
    phi = rng.uniform(-np.pi, np.pi, num_sinusoids)
    psi = rng.uniform(-np.pi, np.pi, num_sinusoids)
    n = np.arange(1, num_sinusoids + 1, dtype=np.float64)
    alpha = (2.0 * np.pi * n - np.pi + theta) / (4.0 * num_sinusoids)
    return np.cos(alpha), np.sin(alpha), phi, psi


def generate_fading(
    config: FadingConfig, length: int, rng: np.random.Generator | None = None
) -> np.ndarray:
    """Generate ``length`` correlated unit-variance Rayleigh channel taps.

    The returned complex array has ensemble mean 0 and variance 1 per tap,
    with lag-n autocorrelation approaching J0(2*pi*fd*Ts*n).  Passing
    ``rng`` overrides the seed in ``config`` (used by the harness to hand
    each simulation trial its own stream).  Identical (config, length)
    yield identical output.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    if rng is None:
        rng = np.random.default_rng(config.seed)
    cos_a, sin_a, phi, psi = _draw_angles(config.num_sinusoids, rng)
    w_d = 2.0 * np.pi * config.normalized_doppler
    if _backend.using_numba():
        return _sos_taps_numba(length, w_d, cos_a, sin_a, phi, psi)
    return _sos_taps_numpy_impl(length, w_d, cos_a, sin_a, phi, psi)


def generate_awgn(seed, length: int, variance: float = 1.0) -> np.ndarray:
    """Circularly-symmetric complex Gaussian noise, i.i.d. per sample.

    Real and imaginary parts each carry ``variance / 2``.  ``seed`` may be
    anything ``np.random.default_rng`` accepts, or an existing Generator.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    if not (variance > 0.0):
        raise ValueError("variance must be > 0")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    z = rng.standard_normal((2, length))
    return math.sqrt(variance / 2.0) * (z[0] + 1j * z[1])


__all__ = ["FadingConfig", "generate_fading", "generate_awgn"]
