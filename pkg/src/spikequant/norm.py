"""Leaky prefix aggregation and the leaky Alexiewicz norm.

For a train with spikes ``(t_i, a_i)`` the norm is the maximum over
spike indices ``n`` of ``|s_n|`` where

    s_n = exp(-alpha * (t_n - t_{n-1})) * s_{n-1} + a_n,    s_0 = 0.

``alpha = 0`` gives the classical Alexiewicz norm (maximum absolute
prefix sum); ``alpha = math.inf`` is the memoryless limit ``max |a_i|``.
Between spikes the decayed sum can only shrink in magnitude for
``alpha >= 0``, so taking the maximum at spike indices is exact.

All functions here are pure and callable concurrently.
"""

from __future__ import annotations

import math

from .train import SpikeTrain

#: Distinguished leak rate for the memoryless limit.
INFINITE: float = math.inf


def validate_alpha(alpha: float) -> float:
    """Check that a leak rate is a nonnegative real or INFINITE."""
    alpha = float(alpha)
    if not alpha >= 0.0:  # also rejects NaN
        raise ValueError("leak rate alpha must be >= 0 (math.inf allowed)")
    return alpha


def decay_weight(alpha: float, dt: float) -> float:
    """Exponential decay factor ``exp(-alpha * dt)`` for one inter-spike gap.

    Conventions: ``alpha = 0`` gives 1 for every gap; ``alpha = INFINITE``
    gives 0 for ``dt > 0`` and 1 for ``dt = 0``.
    """
    alpha = validate_alpha(alpha)
    dt = float(dt)
    if not dt >= 0.0:  # also rejects NaN
        raise ValueError("dt must be >= 0")
    if alpha == 0.0 or dt == 0.0:
        return 1.0
    if math.isinf(alpha):
        return 0.0
    return math.exp(-alpha * dt)


def oplus_fold(train: SpikeTrain, alpha: float) -> float:
    """Fold a whole train with the decay-weighted accumulation.

    Returns ``a_1 (+) ... (+) a_n`` where ``x (+) y = exp(-alpha*dt)*x + y``,
    i.e. the decayed sum at the last spike; 0 for the empty train.
    """
    alpha = validate_alpha(alpha)
    s = 0.0
    t_prev: float | None = None
    for t, a in zip(train.times, train.amplitudes):
        if t_prev is not None:
            s *= decay_weight(alpha, t - t_prev)
        s += a
        t_prev = t
    return s


def alexiewicz_norm(train: SpikeTrain, alpha: float) -> float:
    """Maximum absolute decayed prefix sum of a train.

    Single pass over the spikes, O(1) extra space.  The decay branches
    match :func:`decay_weight` (no decay for alpha = 0 or dt = 0, hard
    reset to 0 for alpha = INFINITE and dt > 0).
    """
    alpha = validate_alpha(alpha)
    times = train.times
    amps = train.amplitudes
    if not times:
        return 0.0
    leaky = alpha != 0.0
    memoryless = math.isinf(alpha)
    s = 0.0
    best = 0.0
    t_prev = times[0]
    for i in range(len(times)):
        dt = times[i] - t_prev
        if leaky and dt != 0.0:
            s = 0.0 if memoryless else s * math.exp(-alpha * dt)
        s += amps[i]
        t_prev = times[i]
        m = s if s >= 0.0 else -s
        if m > best:
            best = m
    return best
