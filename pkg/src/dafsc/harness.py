"""Experiment orchestration: Monte Carlo BER curves, power-allocation
sweeps, outage curves, the validation suite, and CSV emission.

Simulation is organized as independent trials; a trial carries a few
consecutive frames over one continuously evolving channel realization per
link.  Every trial derives its RNG streams from
(master seed, point index, trial index), so results are reproducible and
independent of worker count or scheduling.  Trials run in fixed-size
batches; the sequential stopping rule is evaluated only at batch
boundaries, which keeps the set of executed trials deterministic.

Both combiners are evaluated on identical channel/noise realizations in a
single pass (paired comparison), so their difference has far lower
variance than independent runs would give.

Confidence half-widths are 1.96 times the larger of the binomial standard
error and the between-trial (cluster) standard error; in slow fading the
errors arrive in bursts, so the binomial term alone would understate the
uncertainty badly.
"""

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import analysis, specfn
from .fading import FadingConfig, generate_awgn, generate_fading
from .phy import ModulationParams, PowerProfile, chain_error_counts

DEFAULT_POWER_GRID_DB = tuple(float(x) / 4.0 for x in range(20, 141, 10))  # 5:35:2.5
DEFAULT_Q_GRID = tuple(round(0.05 * i, 2) for i in range(1, 20))  # 0.05:0.95:0.05
DEFAULT_SWEEP_POWERS_DB = (15.0, 20.0, 25.0)
DEFAULT_SEED = 20260811


@dataclass(frozen=True)
class ExperimentConfig:
    """Settings for one experiment run (dB on the outside, linear inside)."""

    modulation: str = "dbpsk"
    power_db: tuple = DEFAULT_POWER_GRID_DB
    q: float = 0.7
    q_grid: tuple = DEFAULT_Q_GRID
    sweep_power_db: tuple = DEFAULT_SWEEP_POWERS_DB
    amplification: float | None = None
    normalized_doppler: float = 0.001
    num_sinusoids: int = 16
    frame_length: int = 500
    frames_per_trial: int = 2
    batch_trials: int = 32
    min_bit_errors: int = 200
    min_error_trials: int = 48
    max_symbols: int = 20_000_000
    seed: int = DEFAULT_SEED
    workers: int = 1
    analytical_only: bool = False

    def __post_init__(self):
        ModulationParams.from_name(self.modulation)
        if not self.power_db or not self.q_grid or not self.sweep_power_db:
            raise ValueError("power and q grids must be nonempty")
        if not (0.0 < self.q < 1.0):
            raise ValueError("q must lie in (0, 1)")
        if any(not (0.0 < q < 1.0) for q in self.q_grid):
            raise ValueError("q_grid values must lie in (0, 1)")
        if self.min_bit_errors < 100:
            raise ValueError("min_bit_errors must be >= 100")
        if self.min_error_trials < 1:
            raise ValueError("min_error_trials must be >= 1")
        if self.frame_length < 2:
            raise ValueError("frame_length must be >= 2")
        if self.frames_per_trial < 1 or self.batch_trials < 1:
            raise ValueError("frames_per_trial and batch_trials must be >= 1")
        if self.max_symbols < self.frame_length * self.frames_per_trial:
            raise ValueError("max_symbols smaller than a single trial")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")

    @property
    def mod(self) -> ModulationParams:
        return ModulationParams.from_name(self.modulation)

    def profile(self, power_db: float, q: float | None = None) -> PowerProfile:
        return PowerProfile.from_db(power_db, self.q if q is None else q,
                                    self.amplification)


@dataclass(frozen=True)
class BerPoint:
    """One row of a BER curve; simulated fields are None when not run."""

    x: float
    analytical_ber: float
    simulated_ber_sc: float | None = None
    simulated_ber_mrc: float | None = None
    ci_halfwidth_sc: float | None = None
    ci_halfwidth_mrc: float | None = None
    bits_simulated: int = 0


def trial_seed_sequence(master_seed: int, point_index: int, trial_index: int):
    """The RNG root for one (point, trial) pair; collision-free by design."""
    return np.random.SeedSequence(entropy=(master_seed, point_index, trial_index))


def _run_trial(config: ExperimentConfig, profile: PowerProfile,
               point_index: int, trial_index: int):
    mod = config.mod
    n_uses = config.frames_per_trial * (config.frame_length + 1)
    ss = trial_seed_sequence(config.seed, point_index, trial_index)
    streams = [np.random.default_rng(child) for child in ss.spawn(7)]
    fcfg = FadingConfig(normalized_doppler=config.normalized_doppler,
                        num_sinusoids=config.num_sinusoids)
    taps = [generate_fading(fcfg, n_uses, rng=streams[i]) for i in range(3)]
    noise = [generate_awgn(streams[3 + i], n_uses, 1.0) for i in range(3)]
    v_idx = streams[6].integers(0, mod.order, config.frames_per_trial * config.frame_length)
    err_sc, err_mrc = chain_error_counts(
        v_idx, *taps, *noise, profile=profile, mod=mod,
        frame_len=config.frame_length,
    )
    bits = config.frames_per_trial * config.frame_length * mod.bits_per_symbol
    return err_sc, err_mrc, bits


@dataclass(frozen=True)
class PointEstimate:
    ber_sc: float
    ber_mrc: float
    ci_sc: float
    ci_mrc: float
    bits: int
    trials: int
    reached_target: bool


def _halfwidth(errors, bits_total, per_trial_rates, n_trials):
    p = errors / bits_total
    se_binom = math.sqrt(max(p * (1.0 - p), 0.0) / bits_total)
    se_cluster = 0.0
    if n_trials > 1:
        se_cluster = float(np.std(per_trial_rates, ddof=1)) / math.sqrt(n_trials)
    return 1.96 * max(se_binom, se_cluster)


def simulate_point(config: ExperimentConfig, profile: PowerProfile,
                   point_index: int) -> PointEstimate:
    """Paired SC / semi-MRC Monte Carlo at one operating point.

    Runs deterministic batches of trials until both combiners have
    accumulated ``min_bit_errors`` across at least ``min_error_trials``
    error-bearing trials, or until the symbol budget is exhausted.  The
    occupancy floor matters in slow fading: errors arrive in bursts, and
    the between-trial standard error is only trustworthy once enough
    independent trials have contributed errors.
    """
    trial_symbols = config.frames_per_trial * config.frame_length
    max_trials = max(1, math.ceil(config.max_symbols / trial_symbols))
    err_sc = err_mrc = bits = 0
    occupied_sc = occupied_mrc = 0
    rates_sc = []
    rates_mrc = []
    trial = 0
    executor = (ThreadPoolExecutor(max_workers=config.workers)
                if config.workers > 1 else None)
    try:
        while True:
            batch = range(trial, min(trial + config.batch_trials, max_trials))
            if not len(batch):
                break
            if executor is None:
                results = [_run_trial(config, profile, point_index, t) for t in batch]
            else:
                futures = [executor.submit(_run_trial, config, profile, point_index, t)
                           for t in batch]
                results = [f.result() for f in futures]
            for e_sc, e_mrc, b in results:
                err_sc += e_sc
                err_mrc += e_mrc
                bits += b
                occupied_sc += e_sc > 0
                occupied_mrc += e_mrc > 0
                rates_sc.append(e_sc / b)
                rates_mrc.append(e_mrc / b)
            trial = batch.stop
            done = (min(err_sc, err_mrc) >= config.min_bit_errors
                    and min(occupied_sc, occupied_mrc) >= config.min_error_trials)
            if done or trial >= max_trials:
                break
    finally:
        if executor is not None:
            executor.shutdown()
    n = len(rates_sc)
    return PointEstimate(
        ber_sc=err_sc / bits,
        ber_mrc=err_mrc / bits,
        ci_sc=_halfwidth(err_sc, bits, rates_sc, n),
        ci_mrc=_halfwidth(err_mrc, bits, rates_mrc, n),
        bits=bits,
        trials=n,
        reached_target=min(err_sc, err_mrc) >= config.min_bit_errors,
    )


def run_ber_curve(config: ExperimentConfig):
    """BER versus total power for both combiners plus the exact curve.

    Returns (points, warnings); a warning is recorded (not raised) for any
    point whose error target was not reached within the symbol budget.
    """
    mod = config.mod
    points = []
    warnings = []
    for index, p_db in enumerate(config.power_db):
        profile = config.profile(p_db)
        ana = analysis.analytical_ber(mod, profile)
        if config.analytical_only:
            points.append(BerPoint(x=p_db, analytical_ber=ana))
            continue
        est = simulate_point(config, profile, index)
        if not est.reached_target:
            warnings.append(
                f"point {p_db:.2f} dB: {config.max_symbols} symbol budget hit "
                f"before {config.min_bit_errors} errors (low confidence)"
            )
        points.append(BerPoint(
            x=p_db,
            analytical_ber=ana,
            simulated_ber_sc=est.ber_sc,
            simulated_ber_mrc=est.ber_mrc,
            ci_halfwidth_sc=est.ci_sc,
            ci_halfwidth_mrc=est.ci_mrc,
            bits_simulated=est.bits,
        ))
    return points, warnings


def run_power_allocation_sweep(config: ExperimentConfig):
    """Analytical BER over the q grid for each sweep power.

    Returns (tables, argmin_q) where ``tables`` maps power in dB to its
    list of BerPoints (x = q) and ``argmin_q`` maps power to the grid q
    minimizing the analytical BER.  Purely analytical, bit-reproducible.
    """
    mod = config.mod
    tables = {}
    argmin_q = {}
    for p_db in config.sweep_power_db:
        rows = [
            BerPoint(x=q, analytical_ber=analysis.analytical_ber(
                mod, config.profile(p_db, q)))
            for q in config.q_grid
        ]
        tables[p_db] = rows
        argmin_q[p_db] = rows[int(np.argmin([r.analytical_ber for r in rows]))].x
    return tables, argmin_q


@dataclass(frozen=True)
class OutagePoint:
    power_db: float
    gamma_th_db: float
    analytical: float
    mc_estimate: float | None = None
    ci_halfwidth: float | None = None
    draws: int = 0


def run_outage_curve(config: ExperimentConfig, gamma_th_db, mc_draws: int = 0):
    """Outage probability over (power grid) x (threshold grid).

    ``mc_draws`` > 0 adds a Monte Carlo estimate column obtained by
    sampling the combiner output SNR directly.
    """
    rows = []
    for i, p_db in enumerate(config.power_db):
        profile = config.profile(p_db)
        for j, g_db in enumerate(gamma_th_db):
            g_lin = 10.0 ** (g_db / 10.0)
            ana = analysis.outage_probability(g_lin, profile)
            if mc_draws > 0:
                rng = np.random.default_rng(
                    np.random.SeedSequence(entropy=(config.seed, 10_000 + i, j)))
                draws = analysis.draw_combiner_snr(profile, mc_draws, rng)
                mc = float(np.mean(draws <= g_lin))
                ci = 1.96 * math.sqrt(max(mc * (1.0 - mc), 0.0) / mc_draws)
                rows.append(OutagePoint(p_db, g_db, ana, mc, ci, mc_draws))
            else:
                rows.append(OutagePoint(p_db, g_db, ana))
    return rows


# ---------------------------------------------------------------------------
# CSV emission.  One header row; x and other dB/q coordinates with two
# decimals, probabilities in scientific notation with six significant
# digits, blank cells for absent values.

BER_CSV_HEADER = ["x", "analytical", "sim_sc", "ci_sc", "sim_mrc", "ci_mrc", "bits"]
OUTAGE_CSV_HEADER = ["power_db", "gamma_th_db", "analytical", "mc", "ci_mc", "draws"]


def _fmt_prob(v) -> str:
    return "" if v is None else f"{v:.5e}"


def write_ber_csv(path_or_file, points) -> None:
    close = False
    fh = path_or_file
    if not hasattr(fh, "write"):
        fh = open(fh, "w", newline="")
        close = True
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(BER_CSV_HEADER)
        for p in points:
            writer.writerow([
                f"{p.x:.2f}",
                _fmt_prob(p.analytical_ber),
                _fmt_prob(p.simulated_ber_sc),
                _fmt_prob(p.ci_halfwidth_sc),
                _fmt_prob(p.simulated_ber_mrc),
                _fmt_prob(p.ci_halfwidth_mrc),
                str(p.bits_simulated),
            ])
    finally:
        if close:
            fh.close()


def read_ber_csv(path_or_file):
    close = False
    fh = path_or_file
    if not hasattr(fh, "read"):
        fh = open(fh, "r", newline="")
        close = True
    try:
        reader = csv.reader(fh)
        header = next(reader)
        if header != BER_CSV_HEADER:
            raise ValueError(f"unexpected CSV header: {header}")
        points = []
        for row in reader:
            opt = lambda s: None if s == "" else float(s)
            points.append(BerPoint(
                x=float(row[0]),
                analytical_ber=float(row[1]),
                simulated_ber_sc=opt(row[2]),
                ci_halfwidth_sc=opt(row[3]),
                simulated_ber_mrc=opt(row[4]),
                ci_halfwidth_mrc=opt(row[5]),
                bits_simulated=int(row[6]),
            ))
        return points
    finally:
        if close:
            fh.close()


def ber_csv_text(points) -> str:
    buf = io.StringIO()
    write_ber_csv(buf, points)
    return buf.getvalue()


def write_outage_csv(path_or_file, rows) -> None:
    close = False
    fh = path_or_file
    if not hasattr(fh, "write"):
        fh = open(fh, "w", newline="")
        close = True
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(OUTAGE_CSV_HEADER)
        for r in rows:
            writer.writerow([
                f"{r.power_db:.2f}",
                f"{r.gamma_th_db:.2f}",
                _fmt_prob(r.analytical),
                _fmt_prob(r.mc_estimate),
                _fmt_prob(r.ci_halfwidth),
                str(r.draws),
            ])
    finally:
        if close:
            fh.close()


# ---------------------------------------------------------------------------
# Validation suite


@dataclass(frozen=True)
class ValidationCheck:
    name: str
    passed: bool
    observed: float
    bound: str


def _oracle_ber_2d(mod: ModulationParams, profile: PowerProfile) -> float:
    """Independent route to the average BER: numerical two-level quadrature
    of the conditional error integral, averaging the rational branch terms
    over the exponential relay-destination gain without any E1 algebra."""
    from scipy.integrate import quad

    p0 = profile.p0
    a2 = profile.amplification**2

    def inner(theta):
        weight, snr_scale = analysis.angle_weights(theta, mod)
        s = 1.0 + p0 * snr_scale
        t = 2.0 + p0 * snr_scale

        def over_gain(lam):
            relayed = (1.0 + a2 * lam) / (1.0 + a2 * lam * s)
            joint = (1.0 + 2.0 * a2 * lam) / (1.0 + a2 * lam * t)
            return (1.0 / s + relayed - joint) * math.exp(-lam)

        value, _ = quad(over_gain, 0.0, np.inf, epsabs=1e-14, epsrel=1e-12, limit=300)
        return weight * value

    value, _ = quad(inner, -np.pi, np.pi, epsabs=1e-15, epsrel=1e-11, limit=300)
    return value / (4.0 * math.pi)


def _outage_quadrature(gamma_th: float, profile: PowerProfile) -> float:
    """Average of the conditional max-SNR CDF over the relay-destination
    gain by direct quadrature (independent of the Bessel closed form)."""
    from scipy.integrate import quad

    def integrand(lam):
        c = analysis.relay_branch_mean_snr(profile, lam)
        return analysis.conditional_gamma_max_cdf(gamma_th, profile.p0, c) * math.exp(-lam)

    value, _ = quad(integrand, 0.0, np.inf, epsabs=1e-14, epsrel=1e-12, limit=300)
    return value


def run_validation_suite(seed: int = DEFAULT_SEED):
    """Execute the module-level oracle comparisons and return the report.

    Covers the special-function grids against their frozen brute-force
    oracle values, quadrature against a closed form, the BER closed form
    against the independent two-level quadrature, fading statistics, the
    diversity slope of the high-power approximation, and the outage
    closed form against direct averaging.
    """
    from . import _reference_tables as tables

    checks = []

    def add(name, observed, bound_value, bound_text, upper=True):
        ok = observed <= bound_value if upper else observed >= bound_value
        checks.append(ValidationCheck(name, bool(ok), float(observed), bound_text))

    rel = lambda got, want: float(np.max(np.abs(got - want) / np.abs(want)))
    add("specfn.e1_grid",
        rel(specfn.exp_integral_e1(tables.E1_X), tables.E1_VALUES),
        1e-12, "max rel err <= 1e-12")
    add("specfn.scaled_e1_grid",
        rel(specfn.scaled_e1(tables.E1_X), tables.SCALED_E1_VALUES),
        1e-10, "max rel err <= 1e-10")
    add("specfn.k1_grid",
        rel(specfn.bessel_k1(tables.K1_X), tables.K1_VALUES),
        1e-10, "max rel err <= 1e-10")
    add("specfn.j0_grid",
        float(np.max(np.abs(specfn.bessel_j0(tables.J0_X) - tables.J0_VALUES))),
        1e-10, "max abs err <= 1e-10")

    closed = 2.0 * math.pi / 0.75
    got = specfn.integrate_theta(lambda th: 1.0 / (1.25 + np.sin(th)))
    add("quadrature.closed_form", abs(got - closed) / closed, 1e-10, "rel err <= 1e-10")

    worst = 0.0
    for mod in (ModulationParams.dbpsk(), ModulationParams.dqpsk()):
        for p_db in (10.0, 20.0, 30.0):
            for q in (0.5, 0.9):
                profile = PowerProfile.from_db(p_db, q)
                a = analysis.analytical_ber(mod, profile)
                o = _oracle_ber_2d(mod, profile)
                worst = max(worst, abs(a - o) / o)
    add("ber.closed_form_vs_2d_quadrature", worst, 1e-8, "max rel err <= 1e-8")

    n = 1_000_000
    fcfg = FadingConfig(normalized_doppler=0.001)
    taps = generate_fading(fcfg, n, rng=np.random.default_rng(seed))
    var = float(np.mean(np.abs(taps) ** 2))
    add("fading.variance", abs(var - 1.0), 0.02, "|var - 1| <= 0.02")
    worst_ac = 0.0
    for lag in (1, 10, 100):
        ac = float(np.mean(taps[lag:] * np.conj(taps[:-lag])).real) / var
        worst_ac = max(worst_ac, abs(ac - specfn.bessel_j0(2 * math.pi * 0.001 * lag)))
    add("fading.autocorrelation", worst_ac, 0.03, "max |ac - J0| <= 0.03 at lags 1/10/100")
    step = float(np.mean(np.abs(taps[1:] - taps[:-1]) ** 2))
    add("fading.slow_fading_step", step, 1e-4, "mean |h[k]-h[k-1]|^2 < 1e-4")

    # independence estimated at a faster doppler: the product of two
    # slowly fading processes decorrelates so slowly that a 1e6-sample
    # correlation estimate at fd*Ts = 0.001 has ~0.03 scatter on its own
    fast = FadingConfig(normalized_doppler=0.2)
    three = [generate_fading(fast, n, rng=np.random.default_rng(c))
             for c in np.random.SeedSequence(seed + 2).spawn(3)]
    worst_rho = 0.0
    for i in range(3):
        for j in range(i + 1, 3):
            rho = np.mean(three[i] * np.conj(three[j])) / math.sqrt(
                float(np.mean(np.abs(three[i]) ** 2)) * float(np.mean(np.abs(three[j]) ** 2)))
            worst_rho = max(worst_rho, abs(rho))
    add("fading.cross_independence", worst_rho, 0.01, "max |rho| < 0.01")

    mod = ModulationParams.dbpsk()
    a30 = analysis.ber_high_snr_approx(mod, PowerProfile.from_db(30.0, 0.7))
    a40 = analysis.ber_high_snr_approx(mod, PowerProfile.from_db(40.0, 0.7))
    slope = -(math.log10(a40) - math.log10(a30))
    checks.append(ValidationCheck(
        "diversity.approx_slope", 1.9 <= slope <= 2.05, slope, "in [1.9, 2.05]"))
    p35 = PowerProfile.from_db(35.0, 0.7)
    ratio = analysis.ber_high_snr_approx(mod, p35) / analysis.analytical_ber(mod, p35)
    add("diversity.approx_below_exact", ratio, 1.0, "approx/exact <= 1")

    worst_out = 0.0
    for p0 in (2.0, 10.0, 50.0):
        for amp in (0.5, 1.0):
            profile = PowerProfile(total_power=p0 / 0.7, q=0.7, amplification=amp)
            for g in (0.5, 2.0):
                a = analysis.outage_probability(g, profile)
                o = _outage_quadrature(g, profile)
                worst_out = max(worst_out, abs(a - o) / o)
    add("outage.closed_form_vs_quadrature", worst_out, 1e-8, "max rel err <= 1e-8")

    return {
        "passed": all(c.passed for c in checks),
        "checks": [c.__dict__ for c in checks],
    }


def validation_report_json(report) -> str:
    return json.dumps(report, indent=2)


__all__ = [
    "ExperimentConfig",
    "BerPoint",
    "OutagePoint",
    "PointEstimate",
    "DEFAULT_POWER_GRID_DB",
    "DEFAULT_Q_GRID",
    "DEFAULT_SWEEP_POWERS_DB",
    "DEFAULT_SEED",
    "trial_seed_sequence",
    "simulate_point",
    "run_ber_curve",
    "run_power_allocation_sweep",
    "run_outage_curve",
    "run_validation_suite",
    "validation_report_json",
    "write_ber_csv",
    "read_ber_csv",
    "ber_csv_text",
    "write_outage_csv",
    "BER_CSV_HEADER",
    "OUTAGE_CSV_HEADER",
]
