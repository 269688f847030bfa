"""Command-line interface.

Subcommands: ``ber-curve``, ``power-sweep``, ``outage``, ``validate``.
Values can also come from a key=value config file via ``--config``;
explicit flags override file entries.

Exit codes: 0 success, 1 usage error, 2 validation failure, 3 budget /
convergence warnings escalated by ``--strict``.
"""

import argparse
import io
import sys
from dataclasses import fields

from . import harness
from .harness import ExperimentConfig


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def parse_grid(text: str):
    """Parse a numeric list ("5,10,15") or inclusive range ("5:35:2.5")."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise ValueError("range step must be > 0")
        values = []
        v = start
        while v <= stop + 1e-9 * max(1.0, abs(step)):
            values.append(round(v, 10))
            v += step
        if not values:
            raise ValueError(f"empty range {text!r}")
        return tuple(values)
    return tuple(float(p) for p in text.split(",") if p.strip())


_CONFIG_KEYS = {f.name for f in fields(ExperimentConfig)}
_GRID_KEYS = {"power_db", "q_grid", "sweep_power_db"}
_INT_KEYS = {"num_sinusoids", "frame_length", "frames_per_trial", "batch_trials",
             "min_bit_errors", "min_error_trials", "max_symbols", "seed", "workers"}
_FLOAT_KEYS = {"q", "amplification", "normalized_doppler"}
_BOOL_KEYS = {"analytical_only"}


def load_config_file(path: str) -> dict:
    """Read ``key = value`` lines (# comments allowed) into config kwargs."""
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            if key in _GRID_KEYS:
                out[key] = parse_grid(value)
            elif key in _INT_KEYS:
                out[key] = int(value)
            elif key in _FLOAT_KEYS:
                out[key] = float(value)
            elif key in _BOOL_KEYS:
                out[key] = value.lower() in ("1", "true", "yes", "on")
            else:
                out[key] = value
    return out


def _add_common(sub):
    sub.add_argument("--config", help="key=value config file; flags override it")
    sub.add_argument("--mod", choices=["dbpsk", "dqpsk"], help="modulation")
    sub.add_argument("--power-db", help="total power grid, list or start:stop:step (dB)")
    sub.add_argument("--q", type=float, help="power allocation fraction for the source")
    sub.add_argument("--amp", type=float, help="override the relay amplification factor")
    sub.add_argument("--doppler", type=float, help="normalized Doppler (fd*Ts)")
    sub.add_argument("--seed", type=int, help="master RNG seed")
    sub.add_argument("--workers", type=int, help="worker threads for simulation")
    sub.add_argument("--min-errors", type=int, help="bit-error target per point")
    sub.add_argument("--max-symbols", type=int, help="symbol budget per point")
    sub.add_argument("--analytical-only", action="store_true", default=None,
                     help="skip simulation, emit analytical values only")
    sub.add_argument("--out", help="output CSV path (default: stdout)")
    sub.add_argument("--strict", action="store_true",
                     help="exit 3 if any point missed its error target")


def build_parser() -> _Parser:
    parser = _Parser(prog="dafsc", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="command", required=True)

    ber = subs.add_parser("ber-curve", parents=[], help="BER vs total power")
    _add_common(ber)

    sweep = subs.add_parser("power-sweep", help="analytical BER vs allocation q")
    _add_common(sweep)
    sweep.add_argument("--q-grid", help="q grid, list or start:stop:step")

    outage = subs.add_parser("outage", help="outage probability vs threshold")
    _add_common(outage)
    outage.add_argument("--gamma-db", default="0:20:2",
                        help="SNR threshold grid in dB (default 0:20:2)")
    outage.add_argument("--mc-draws", type=int, default=0,
                        help="Monte Carlo draws per point (0 disables the check column)")

    val = subs.add_parser("validate", help="run the oracle validation suite")
    val.add_argument("--seed", type=int, help="seed for the statistical checks")
    val.add_argument("--out", help="write the JSON report here (default: stdout)")
    return parser


def _build_config(args) -> ExperimentConfig:
    kwargs = {}
    if args.config:
        kwargs.update(load_config_file(args.config))
    overrides = {
        "modulation": args.mod,
        "q": args.q,
        "amplification": args.amp,
        "normalized_doppler": args.doppler,
        "seed": args.seed,
        "workers": args.workers,
        "min_bit_errors": args.min_errors,
        "max_symbols": args.max_symbols,
        "analytical_only": args.analytical_only,
    }
    if args.power_db is not None:
        overrides["power_db"] = parse_grid(args.power_db)
    if getattr(args, "q_grid", None) is not None:
        overrides["q_grid"] = parse_grid(args.q_grid)
    kwargs.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig(**kwargs)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "validate":
            report = harness.run_validation_suite(
                seed=args.seed if args.seed is not None else harness.DEFAULT_SEED)
            _emit(harness.validation_report_json(report) + "\n", args.out)
            for check in report["checks"]:
                status = "PASS" if check["passed"] else "FAIL"
                print(f"{status} {check['name']}: {check['observed']:.3e} "
                      f"({check['bound']})", file=sys.stderr)
            return 0 if report["passed"] else 2

        config = _build_config(args)

        if args.command == "ber-curve":
            points, warnings = harness.run_ber_curve(config)
            _emit(harness.ber_csv_text(points), args.out)
            for w in warnings:
                print(f"warning: {w}", file=sys.stderr)
            if warnings and args.strict:
                return 3
            return 0

        if args.command == "power-sweep":
            tables, argmin_q = harness.run_power_allocation_sweep(config)
            chunks = []
            for p_db, rows in tables.items():
                if args.out:
                    stem, dot, ext = args.out.rpartition(".")
                    path = f"{stem}_P{p_db:.2f}dB.{ext}" if dot else f"{args.out}_P{p_db:.2f}dB"
                    harness.write_ber_csv(path, rows)
                else:
                    chunks.append(harness.ber_csv_text(rows))
            if chunks:
                sys.stdout.write("".join(chunks))
            for p_db, q_best in argmin_q.items():
                print(f"P = {p_db:.2f} dB: analytical BER minimized at q = {q_best:.2f}",
                      file=sys.stderr)
            return 0

        if args.command == "outage":
            rows = harness.run_outage_curve(
                config, parse_grid(args.gamma_db), mc_draws=args.mc_draws)
            buf = io.StringIO()
            harness.write_outage_csv(buf, rows)
            _emit(buf.getvalue(), args.out)
            return 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    raise SystemExit(main())
