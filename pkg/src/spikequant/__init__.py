"""Spike-train quantization toolkit.

Leaky integrate-and-fire operator on spike trains with three reset
variants (reset-to-zero, reset-by-subtraction, reset-to-mod), the leaky
Alexiewicz norm, and a seeded Monte-Carlo harness for studying the
quantization error distribution.
"""

from .experiments import (
    BoxStats,
    CellStats,
    ExperimentConfig,
    TrialResult,
    box_stats,
    cell_seed,
    random_train,
    run_trials,
    summarize_trials,
)
from .lif import (
    LifConfig,
    MembraneState,
    ResetMode,
    cascade_oracle,
    lif_run,
    lif_transform,
    membrane_trace,
    quantization_error,
    truncate_quantize,
)
from .norm import INFINITE, alexiewicz_norm, decay_weight, oplus_fold
from .selftest import SelftestReport, run_selftest
from .train import Spike, SpikeTrain, difference, from_events, scale, superpose

__version__ = "0.1.0"

__all__ = [
    "BoxStats",
    "CellStats",
    "ExperimentConfig",
    "INFINITE",
    "LifConfig",
    "MembraneState",
    "ResetMode",
    "SelftestReport",
    "Spike",
    "SpikeTrain",
    "TrialResult",
    "alexiewicz_norm",
    "box_stats",
    "cascade_oracle",
    "cell_seed",
    "decay_weight",
    "difference",
    "from_events",
    "lif_run",
    "lif_transform",
    "membrane_trace",
    "oplus_fold",
    "quantization_error",
    "random_train",
    "run_trials",
    "scale",
    "summarize_trials",
    "superpose",
    "truncate_quantize",
    "__version__",
]
