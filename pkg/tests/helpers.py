"""Independent brute-force oracles and comparison helpers for the tests.

These deliberately avoid the library's single-pass recurrences: norms are
recomputed from scratch for every prefix so they can serve as references.
"""

from __future__ import annotations

import math

from spikequant import SpikeTrain


def brute_prefix_norm(train: SpikeTrain) -> float:
    """Max absolute prefix sum, each prefix summed from scratch (alpha = 0)."""
    best = 0.0
    for n in range(1, len(train) + 1):
        s = 0.0
        for a in train.amplitudes[:n]:
            s += a
        best = max(best, abs(s))
    return best


def brute_leaky_norm(train: SpikeTrain, alpha: float) -> float:
    """Quadratic double-sum norm: every prefix rebuilt with explicit decay."""
    best = 0.0
    for n in range(len(train)):
        t_n = train.times[n]
        s = 0.0
        for j in range(n + 1):
            dt = t_n - train.times[j]
            if math.isinf(alpha):
                w = 1.0 if dt == 0.0 else 0.0
            else:
                w = math.exp(-alpha * dt)
            s += train.amplitudes[j] * w
        best = max(best, abs(s))
    return best


