"""Randomized verification of the quantization bound and the cascade oracle.

Each trial draws a random train (log-uniform spike count, uniform
amplitudes scaled to the trial threshold) for one point of the leak-rate
by threshold grid, then checks:

  * bound: the error norm ``||LIF(train) - train||`` is strictly below
    the threshold (expected to hold for reset-to-mod, and to fail for
    the other modes once amplitudes exceed the threshold);
  * oracle: reset-to-mod output matches the cascaded-subtraction
    reference spike for spike (reset-to-mod trials only);
  * multiples: every emitted amplitude is a nonzero integer multiple of
    the threshold (reset-to-mod trials only).

Every trial is reproducible from (seed, trial index).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .experiments import random_train
from .lif import LifConfig, ResetMode, cascade_oracle, lif_transform, quantization_error
from .norm import INFINITE

GRID_ALPHAS: tuple[float, ...] = (0.0, 0.1, 1.0, 10.0, INFINITE)
GRID_THRESHOLDS: tuple[float, ...] = (0.5, 1.0, 2.0)

AMP_TOL = 1e-9


@dataclass(frozen=True)
class Violation:
    kind: str  # "bound" | "oracle" | "multiples"
    trial: int
    alpha: float
    threshold: float
    n: int
    error_norm: float


@dataclass
class SelftestReport:
    trials: int
    mode: ResetMode
    half_range: float
    seed: int
    bound_violations: int = 0
    oracle_mismatches: int = 0
    multiples_violations: int = 0
    examples: list[Violation] = field(default_factory=list)

    @property
    def total_violations(self) -> int:
        return self.bound_violations + self.oracle_mismatches + self.multiples_violations

    def ok(self) -> bool:
        return self.total_violations == 0


def _trial_train(seed: int, trial: int, half_range: float, max_spikes: int):
    ss = np.random.SeedSequence([seed, trial])
    ss_n, ss_train = ss.spawn(2)
    rng = np.random.default_rng(ss_n)
    n = int(math.exp(rng.uniform(0.0, math.log(max_spikes))))
    n = min(max(n, 1), max_spikes)
    return random_train(n, half_range, ss_train)


def run_selftest(
    runs: int = 10_000,
    mode: ResetMode = ResetMode.TO_MOD,
    half_range: float = 1.5,
    seed: int = 42,
    max_spikes: int = 1000,
    alphas: tuple[float, ...] = GRID_ALPHAS,
    thresholds: tuple[float, ...] = GRID_THRESHOLDS,
    max_examples: int = 5,
) -> SelftestReport:
    """Run ``runs`` seeded trials spread over the alpha/threshold grid.

    ``half_range`` is in units of the trial threshold.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    report = SelftestReport(runs, mode, half_range, seed)
    for trial in range(runs):
        alpha = alphas[trial % len(alphas)]
        theta = thresholds[(trial // len(alphas)) % len(thresholds)]
        train = _trial_train(seed, trial, half_range * theta, max_spikes)
        config = LifConfig(theta, alpha, mode)
        err = quantization_error(train, config)

        def record(kind: str) -> None:
            if len(report.examples) < max_examples:
                report.examples.append(
                    Violation(kind, trial, alpha, theta, len(train), err)
                )

        if not err < theta:
            report.bound_violations += 1
            record("bound")
        if mode is ResetMode.TO_MOD:
            out = lif_transform(train, config)
            ref = cascade_oracle(train, theta, alpha)
            if out.times != ref.times or any(
                abs(x - y) > AMP_TOL for x, y in zip(out.amplitudes, ref.amplitudes)
            ):
                report.oracle_mismatches += 1
                record("oracle")
            for b in out.amplitudes:
                k = round(b / theta)
                if k == 0 or abs(b / theta - k) > AMP_TOL:
                    report.multiples_violations += 1
                    record("multiples")
                    break
    return report


def format_report(report: SelftestReport) -> str:
    lines = [
        f"trials: {report.trials}  mode: {report.mode.value}  "
        f"half-range: {report.half_range} (in threshold units)  seed: {report.seed}",
        f"bound violations: {report.bound_violations}",
    ]
    if report.mode is ResetMode.TO_MOD:
        lines.append(f"oracle mismatches: {report.oracle_mismatches}")
        lines.append(f"non-multiple amplitudes: {report.multiples_violations}")
    for v in report.examples:
        lines.append(
            f"  {v.kind}: trial={v.trial} alpha={v.alpha} threshold={v.threshold} "
            f"n={v.n} error={v.error_norm!r}  (replay: seed={report.seed}, trial={v.trial})"
        )
    if report.ok():
        lines.append("OK: 0 violations")
    else:
        lines.append(f"FAIL: {report.total_violations} violations")
    return "\n".join(lines)
