"""Seeded Monte-Carlo studies of the quantization error distribution.

Each cell of the study grid (reset mode, leak rate, spike count) draws
``runs`` independent random trains, applies the LIF operator and records
the error norm ``||LIF(train) - train||`` under the same leak rate.
Cell substreams are derived by splittable hashing of
``(seed, mode index, alpha index, n, run index)`` so any single cell can
be reproduced in isolation and results do not depend on execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .lif import LifConfig, ResetMode, quantization_error
from .norm import validate_alpha
from .train import SpikeTrain

DEFAULT_SPIKE_COUNTS: tuple[int, ...] = (10, 50, 100, 500, 1000)
DEFAULT_ALPHAS: tuple[float, ...] = (1.0, 0.1)
DEFAULT_MODES: tuple[ResetMode, ...] = (
    ResetMode.TO_MOD,
    ResetMode.BY_SUBTRACTION,
    ResetMode.TO_ZERO,
)

SPACINGS = ("unit", "poisson")
AMPLITUDE_LAWS = ("uniform", "gauss")


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one study; identical configs give identical results.

    ``amplitude_half_range`` is expressed in units of the threshold:
    amplitudes are drawn from ``[-r*threshold, +r*threshold]``.
    """

    runs: int = 100
    spike_counts: tuple[int, ...] = DEFAULT_SPIKE_COUNTS
    amplitude_half_range: float = 1.0
    threshold: float = 1.0
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    modes: tuple[ResetMode, ...] = DEFAULT_MODES
    seed: int = 42
    spacing: str = "unit"
    amplitudes: str = "uniform"

    def __post_init__(self) -> None:
        if int(self.runs) < 1:
            raise ValueError("runs must be >= 1")
        object.__setattr__(self, "runs", int(self.runs))
        counts = tuple(int(n) for n in self.spike_counts)
        if not counts or any(n < 1 for n in counts):
            raise ValueError("spike_counts must be a nonempty list of positive integers")
        object.__setattr__(self, "spike_counts", counts)
        r = float(self.amplitude_half_range)
        if not (math.isfinite(r) and r > 0.0):
            raise ValueError("amplitude_half_range must be positive and finite")
        object.__setattr__(self, "amplitude_half_range", r)
        theta = float(self.threshold)
        if not (math.isfinite(theta) and theta > 0.0):
            raise ValueError("threshold must be positive and finite")
        object.__setattr__(self, "threshold", theta)
        alphas = tuple(validate_alpha(a) for a in self.alphas)
        if not alphas:
            raise ValueError("alphas must be nonempty")
        object.__setattr__(self, "alphas", alphas)
        modes = tuple(ResetMode(m) if not isinstance(m, ResetMode) else m for m in self.modes)
        if not modes:
            raise ValueError("modes must be nonempty")
        object.__setattr__(self, "modes", modes)
        seed = int(self.seed)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        object.__setattr__(self, "seed", seed)
        if self.spacing not in SPACINGS:
            raise ValueError(f"spacing must be one of {SPACINGS}")
        if self.amplitudes not in AMPLITUDE_LAWS:
            raise ValueError(f"amplitudes must be one of {AMPLITUDE_LAWS}")

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        """Build a config from a JSON-style dict; unknown keys are rejected.

        Leak rates may be given as the string ``"inf"``.
        """
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        kwargs = dict(data)
        if "alphas" in kwargs:
            kwargs["alphas"] = tuple(float(a) for a in kwargs["alphas"])
        if "spike_counts" in kwargs:
            kwargs["spike_counts"] = tuple(kwargs["spike_counts"])
        if "modes" in kwargs:
            kwargs["modes"] = tuple(ResetMode(m) for m in kwargs["modes"])
        return cls(**kwargs)

    def to_dict(self) -> dict:
        return {
            "runs": self.runs,
            "spike_counts": list(self.spike_counts),
            "amplitude_half_range": self.amplitude_half_range,
            "threshold": self.threshold,
            "alphas": ["inf" if math.isinf(a) else a for a in self.alphas],
            "modes": [m.value for m in self.modes],
            "seed": self.seed,
            "spacing": self.spacing,
            "amplitudes": self.amplitudes,
        }


class TrialResult(NamedTuple):
    mode: ResetMode
    alpha: float
    n: int
    run: int
    error_norm: float


@dataclass(frozen=True)
class BoxStats:
    """Quartile summary of one sample: type-7 quartiles, 1.5*IQR whiskers."""

    n_samples: int
    median: float
    q1: float
    q3: float
    whisker_low: float
    whisker_high: float
    outliers: tuple[float, ...] = field(default_factory=tuple)


def cell_seed(seed: int, mode_index: int, alpha_index: int, n: int, run: int) -> int:
    """Derive the reproducible substream seed of one trial."""
    ss = np.random.SeedSequence([seed, mode_index, alpha_index, n, run])
    return int(ss.generate_state(1, np.uint64)[0])


def random_train(
    n: int,
    half_range: float,
    seed: int | np.random.SeedSequence,
    spacing: str = "unit",
    amplitudes: str = "uniform",
) -> SpikeTrain:
    """Random train of ``n`` spikes, fully determined by ``seed``.

    Times are the unit grid 0..n-1 by default, or cumulative exponential
    gaps of rate 1 for ``spacing="poisson"`` (first spike at 0).
    Amplitudes are i.i.d. uniform on ``[-half_range, +half_range]``; the
    ``"gauss"`` law draws a centered normal with sigma = half_range/2,
    resampled until inside the range.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    half_range = float(half_range)
    if not (math.isfinite(half_range) and half_range > 0.0):
        raise ValueError("half_range must be positive and finite")
    if spacing not in SPACINGS:
        raise ValueError(f"spacing must be one of {SPACINGS}")
    if amplitudes not in AMPLITUDE_LAWS:
        raise ValueError(f"amplitudes must be one of {AMPLITUDE_LAWS}")
    rng = np.random.default_rng(seed)
    if spacing == "unit":
        times = np.arange(n, dtype=float)
    else:
        gaps = rng.exponential(1.0, n - 1)
        times = np.concatenate([[0.0], np.cumsum(gaps)])
    if amplitudes == "uniform":
        amps = rng.uniform(-half_range, half_range, n)
    else:
        amps = rng.normal(0.0, half_range / 2.0, n)
        bad = np.abs(amps) > half_range
        while bad.any():
            amps[bad] = rng.normal(0.0, half_range / 2.0, int(bad.sum()))
            bad = np.abs(amps) > half_range
    return SpikeTrain(tuple(times.tolist()), tuple(amps.tolist()))


def run_trials(config: ExperimentConfig) -> list[TrialResult]:
    """Record the error norm of every trial, in canonical row order."""
    results: list[TrialResult] = []
    half_range = config.amplitude_half_range * config.threshold
    for m_idx, mode in enumerate(config.modes):
        for a_idx, alpha in enumerate(config.alphas):
            lif_config = LifConfig(config.threshold, alpha, mode)
            for n in config.spike_counts:
                for run in range(config.runs):
                    train = random_train(
                        n,
                        half_range,
                        cell_seed(config.seed, m_idx, a_idx, n, run),
                        config.spacing,
                        config.amplitudes,
                    )
                    err = quantization_error(train, lif_config)
                    results.append(TrialResult(mode, alpha, n, run, err))
    return results


def box_stats(samples: Sequence[float]) -> BoxStats:
    """Quartile/whisker summary of a nonempty sample.

    Quartiles interpolate linearly between order statistics; whiskers sit
    on the most extreme samples within 1.5*IQR of the quartiles and the
    remaining points are listed as outliers.
    """
    data = np.asarray(samples, dtype=float)
    if data.size == 0:
        raise ValueError("samples must be nonempty")
    q1, med, q3 = np.percentile(data, [25.0, 50.0, 75.0])
    iqr = q3 - q1
    low_fence = q1 - 1.5 * iqr
    high_fence = q3 + 1.5 * iqr
    inside_low = data[data >= low_fence]
    inside_high = data[data <= high_fence]
    # whiskers never retreat past the box itself
    whisker_low = min(float(q1), float(inside_low.min())) if inside_low.size else float(q1)
    whisker_high = max(float(q3), float(inside_high.max())) if inside_high.size else float(q3)
    outliers = tuple(
        float(x) for x in np.sort(data[(data < whisker_low) | (data > whisker_high)])
    )
    return BoxStats(
        n_samples=int(data.size),
        median=float(med),
        q1=float(q1),
        q3=float(q3),
        whisker_low=whisker_low,
        whisker_high=whisker_high,
        outliers=outliers,
    )


class CellStats(NamedTuple):
    mode: ResetMode
    alpha: float
    n: int
    stats: BoxStats


def summarize_trials(results: Iterable[TrialResult]) -> list[CellStats]:
    """Group trial rows per (mode, alpha, n) cell and summarize each group.

    Cells appear in first-seen order, which is canonical for rows from
    :func:`run_trials`.
    """
    groups: dict[tuple[ResetMode, float, int], list[float]] = {}
    for row in results:
        groups.setdefault((row.mode, row.alpha, row.n), []).append(row.error_norm)
    return [
        CellStats(mode, alpha, n, box_stats(values))
        for (mode, alpha, n), values in groups.items()
    ]
