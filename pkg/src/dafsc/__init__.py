"""Differential amplify-and-forward relay link simulator and exact
analytical engine, with post-detection selection combining and fixed-weight
(semi-MRC) combining at the destination.

The package splits into: special functions and quadrature (``specfn``),
correlated Rayleigh fading and noise generation (``fading``), the
transmit/relay/receive chain (``phy``), closed-form BER / outage analysis
(``analysis``), and experiment orchestration with a CLI (``harness``,
``cli``).
"""

from ._backend import BACKEND, HAS_NUMBA, using_numba
from .analysis import (
    analytical_ber,
    ber_high_snr_approx,
    conditional_gamma_max_cdf,
    outage_probability,
)
from .fading import FadingConfig, generate_awgn, generate_fading
from .harness import (
    BerPoint,
    ExperimentConfig,
    run_ber_curve,
    run_outage_curve,
    run_power_allocation_sweep,
    run_validation_suite,
)
from .phy import (
    ModulationParams,
    PowerProfile,
    SymbolFrame,
    differential_decode,
    differential_encode,
    min_distance_detect,
    run_frame,
    select_combine,
    semi_mrc_combine,
)
from .specfn import (
    QuadratureConvergenceError,
    QuadratureSpec,
    bessel_j0,
    bessel_k1,
    exp_integral_e1,
    integrate_theta,
    scaled_e1,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HAS_NUMBA",
    "using_numba",
    "analytical_ber",
    "ber_high_snr_approx",
    "conditional_gamma_max_cdf",
    "outage_probability",
    "FadingConfig",
    "generate_awgn",
    "generate_fading",
    "BerPoint",
    "ExperimentConfig",
    "run_ber_curve",
    "run_outage_curve",
    "run_power_allocation_sweep",
    "run_validation_suite",
    "ModulationParams",
    "PowerProfile",
    "SymbolFrame",
    "differential_decode",
    "differential_encode",
    "min_distance_detect",
    "run_frame",
    "select_combine",
    "semi_mrc_combine",
    "QuadratureConvergenceError",
    "QuadratureSpec",
    "bessel_j0",
    "bessel_k1",
    "exp_integral_e1",
    "integrate_theta",
    "scaled_e1",
    "__version__",
]
