"""Command-line front end.

Subcommands are thin adapters over the library: ``norm``, ``lif``,
``quant-error``, ``experiment`` and ``selftest``.  Exit codes: 0 on
success, 1 when ``selftest`` finds violations, 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import io as spio
from .experiments import run_trials, summarize_trials
from .lif import LifConfig, ResetMode, lif_transform, membrane_trace, quantization_error
from .norm import alexiewicz_norm
from .selftest import format_report, run_selftest
from .svg import alpha_label, boxplot_svg


def _alpha_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if math.isnan(value) or value < 0.0:
        raise argparse.ArgumentTypeError("alpha must be nonnegative (or 'inf')")
    return value


def _threshold_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(value) and value > 0.0):
        raise argparse.ArgumentTypeError("threshold must be positive")
    return value


def _mode_arg(text: str) -> ResetMode:
    try:
        return ResetMode(text)
    except ValueError:
        choices = ", ".join(m.value for m in ResetMode)
        raise argparse.ArgumentTypeError(f"mode must be one of: {choices}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spikequant",
        description="Spike-train quantization via leaky integrate-and-fire neurons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser("norm", help="leaky Alexiewicz norm of a train")
    p_norm.add_argument("--alpha", type=_alpha_arg, required=True, metavar="VALUE|inf")
    p_norm.add_argument("train", metavar="TRAIN_CSV")

    p_lif = sub.add_parser("lif", help="apply the LIF operator to a train")
    p_lif.add_argument("--threshold", type=_threshold_arg, required=True)
    p_lif.add_argument("--alpha", type=_alpha_arg, required=True, metavar="VALUE|inf")
    p_lif.add_argument("--mode", type=_mode_arg, required=True, metavar="zero|subtract|mod")
    p_lif.add_argument("--trace", metavar="TIMES_CSV", help="sample times for a membrane trace")
    p_lif.add_argument("--trace-out", metavar="TRACE_CSV", help="where to write the trace")
    p_lif.add_argument("train", metavar="TRAIN_CSV")

    p_err = sub.add_parser("quant-error", help="error norm of LIF(train) - train")
    p_err.add_argument("--threshold", type=_threshold_arg, required=True)
    p_err.add_argument("--alpha", type=_alpha_arg, required=True, metavar="VALUE|inf")
    p_err.add_argument("--mode", type=_mode_arg, required=True, metavar="zero|subtract|mod")
    p_err.add_argument("train", metavar="TRAIN_CSV")

    p_exp = sub.add_parser("experiment", help="run a Monte-Carlo error study")
    p_exp.add_argument("--config", required=True, metavar="CONFIG_JSON")
    p_exp.add_argument("--out", default=".", metavar="DIR", help="output directory")
    p_exp.add_argument("--svg", metavar="DIR", help="also emit one boxplot grid per (mode, alpha)")

    p_self = sub.add_parser("selftest", help="randomized bound and oracle checks")
    p_self.add_argument("--runs", type=int, default=10_000)
    p_self.add_argument("--mode", type=_mode_arg, default=ResetMode.TO_MOD,
                        metavar="zero|subtract|mod")
    p_self.add_argument("--half-range", type=float, default=1.5,
                        help="amplitude half-range in threshold units")
    p_self.add_argument("--seed", type=int, default=42)
    return parser


def _cmd_norm(args: argparse.Namespace) -> int:
    train = spio.read_train_csv(args.train)
    print(repr(alexiewicz_norm(train, args.alpha)))
    return 0


def _cmd_lif(args: argparse.Namespace) -> int:
    if (args.trace is None) != (args.trace_out is None):
        raise ValueError("--trace and --trace-out must be given together")
    train = spio.read_train_csv(args.train)
    config = LifConfig(args.threshold, args.alpha, args.mode)
    spio.dump_train_csv(lif_transform(train, config), sys.stdout)
    if args.trace is not None:
        samples = spio.read_times_csv(args.trace)
        spio.write_trace_csv(membrane_trace(train, config, samples), args.trace_out)
    return 0


def _cmd_quant_error(args: argparse.Namespace) -> int:
    train = spio.read_train_csv(args.train)
    config = LifConfig(args.threshold, args.alpha, args.mode)
    print(repr(quantization_error(train, config)))
    return 0


def _cmd_experiment(args: argparse.Namespace) -> int:
    config = spio.load_config_json(args.config)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    results = run_trials(config)
    cells = summarize_trials(results)
    spio.write_results_csv(results, out_dir / "results.csv")
    spio.write_stats_csv(cells, out_dir / "stats.csv")
    if args.svg is not None:
        svg_dir = Path(args.svg)
        svg_dir.mkdir(parents=True, exist_ok=True)
        for mode in config.modes:
            for alpha in config.alphas:
                group = [(c.n, c.stats) for c in cells if c.mode is mode and c.alpha == alpha]
                label = alpha_label(alpha)
                svg = boxplot_svg(group, config.threshold, f"mode={mode.value} alpha={label}")
                (svg_dir / f"boxplot_{mode.value}_alpha_{label}.svg").write_text(
                    svg, encoding="utf-8"
                )
    return 0


def _cmd_selftest(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.runs < 1:
        parser.error("--runs must be >= 1")
    if args.half_range <= 0 or not math.isfinite(args.half_range):
        parser.error("--half-range must be positive")
    if args.seed < 0:
        parser.error("--seed must be nonnegative")
    report = run_selftest(
        runs=args.runs, mode=args.mode, half_range=args.half_range, seed=args.seed
    )
    print(format_report(report))
    return 0 if report.ok() else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "norm":
            return _cmd_norm(args)
        if args.command == "lif":
            return _cmd_lif(args)
        if args.command == "quant-error":
            return _cmd_quant_error(args)
        if args.command == "experiment":
            return _cmd_experiment(args)
        if args.command == "selftest":
            return _cmd_selftest(args, parser)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
