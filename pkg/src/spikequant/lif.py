"""Event-driven leaky integrate-and-fire operator on spike trains.

For each input spike ``(t_i, a_i)`` the membrane potential first decays
over the gap since the previous event, then jumps:

    u <- exp(-alpha * (t_i - t_prev)) * u + a_i

If ``|u| >= threshold`` the neuron emits exactly one output spike at
``t_i`` and discharges according to the reset mode:

    reset-to-zero          emit sgn(u)*theta,  u <- 0
    reset-by-subtraction   emit sgn(u)*theta,  u <- u - sgn(u)*theta
    reset-to-mod           emit q*theta,       u <- u - q*theta
                           with q = trunc(u / theta)

Because simultaneous inputs superpose instantaneously, a single event
can push ``|u|`` past several threshold quanta.  Reset-to-mod discharges
the whole multiple at once (equivalently: reset-by-subtraction cascaded
until ``|u| < theta``, see :func:`cascade_oracle`), while plain
reset-by-subtraction removes one quantum per event and carries the
excess forward.  For ``alpha >= 0`` the potential magnitude cannot grow
between events, so thresholds are only crossed at input event times and
the continuous dynamics reduce exactly to this event loop.

The threshold comparison is non-strict (``|u| >= theta``), with no
floating-point slack; at exact equality reset-to-mod emits
``sgn(u)*theta`` and leaves a residual of 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .norm import alexiewicz_norm, decay_weight, validate_alpha
from .train import SpikeTrain, difference


class ResetMode(Enum):
    """Discharge rule applied when the membrane reaches the threshold."""

    TO_ZERO = "zero"
    BY_SUBTRACTION = "subtract"
    TO_MOD = "mod"


@dataclass(frozen=True)
class LifConfig:
    """Threshold, leak rate and reset mode of one neuron."""

    threshold: float
    alpha: float
    mode: ResetMode

    def __post_init__(self) -> None:
        threshold = float(self.threshold)
        if not (math.isfinite(threshold) and threshold > 0.0):
            raise ValueError("threshold must be positive and finite")
        object.__setattr__(self, "threshold", threshold)
        object.__setattr__(self, "alpha", validate_alpha(self.alpha))
        if not isinstance(self.mode, ResetMode):
            raise ValueError(f"mode must be a ResetMode, got {self.mode!r}")


@dataclass(frozen=True)
class MembraneState:
    """Simulation cursor: current potential and time of the last event.

    ``last_event_time`` is None before any event has been processed.
    """

    potential: float = 0.0
    last_event_time: float | None = None


def truncate_quantize(x: float) -> int:
    """Integer truncation toward zero, ``sgn(x) * floor(|x|)``."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("value must be finite")
    return math.trunc(x)


def _discharge(u: float, theta: float, mode: ResetMode) -> tuple[float, float]:
    """Emitted amplitude and post-reset potential for ``|u| >= theta``."""
    if mode is ResetMode.TO_MOD:
        emitted = truncate_quantize(u / theta) * theta
        return emitted, u - emitted
    emitted = theta if u > 0.0 else -theta
    if mode is ResetMode.TO_ZERO:
        return emitted, 0.0
    return emitted, u - emitted  # BY_SUBTRACTION


def lif_run(train: SpikeTrain, config: LifConfig) -> tuple[SpikeTrain, MembraneState]:
    """Run the LIF operator and also return the final membrane state."""
    theta = config.threshold
    alpha = config.alpha
    mode = config.mode
    leaky = alpha != 0.0
    memoryless = math.isinf(alpha)
    times = train.times
    amps = train.amplitudes
    out_t: list[float] = []
    out_a: list[float] = []
    u = 0.0
    if not times:
        return SpikeTrain(), MembraneState(0.0, None)
    t_prev = times[0]
    for i in range(len(times)):
        dt = times[i] - t_prev
        if leaky and dt != 0.0:
            u = 0.0 if memoryless else u * math.exp(-alpha * dt)
        u += amps[i]
        t_prev = times[i]
        if u >= theta or -u >= theta:
            emitted, u = _discharge(u, theta, mode)
            out_t.append(times[i])
            out_a.append(emitted)
    return SpikeTrain(tuple(out_t), tuple(out_a)), MembraneState(u, t_prev)


def lif_transform(train: SpikeTrain, config: LifConfig) -> SpikeTrain:
    """Map an input spike train to the emitted output spike train."""
    return lif_run(train, config)[0]


def cascade_oracle(train: SpikeTrain, threshold: float, alpha: float) -> SpikeTrain:
    """Brute-force definition of reset-to-mod by cascaded subtraction.

    Identical event traversal, but each event repeats
    ``emit sgn(u)*theta; u <- u - sgn(u)*theta`` while ``|u| >= theta``
    and merges the simultaneous emissions into one spike.  Kept as an
    independent reference for :func:`lif_transform` with TO_MOD.
    """
    theta = float(threshold)
    if not (math.isfinite(theta) and theta > 0.0):
        raise ValueError("threshold must be positive and finite")
    alpha = validate_alpha(alpha)
    leaky = alpha != 0.0
    memoryless = math.isinf(alpha)
    times = train.times
    amps = train.amplitudes
    out_t: list[float] = []
    out_a: list[float] = []
    u = 0.0
    if not times:
        return SpikeTrain()
    t_prev = times[0]
    for i in range(len(times)):
        dt = times[i] - t_prev
        if leaky and dt != 0.0:
            u = 0.0 if memoryless else u * math.exp(-alpha * dt)
        u += amps[i]
        t_prev = times[i]
        emitted = 0.0
        while u >= theta or -u >= theta:
            step = theta if u > 0.0 else -theta
            emitted += step
            u -= step
        if emitted != 0.0:
            out_t.append(times[i])
            out_a.append(emitted)
    return SpikeTrain(tuple(out_t), tuple(out_a))


def quantization_error(train: SpikeTrain, config: LifConfig) -> float:
    """Norm of the error train ``LIF(train) - train`` under the same leak."""
    return alexiewicz_norm(difference(lif_transform(train, config), train), config.alpha)


def membrane_trace(
    train: SpikeTrain, config: LifConfig, sample_times: Sequence[float]
) -> list[tuple[float, float]]:
    """Sample the membrane potential at the given sorted times.

    Between events the post-event potential decays exponentially; events
    at a sample time are applied before the sample is taken (the sample
    therefore sees the post-reset residual).
    """
    theta = config.threshold
    alpha = config.alpha
    mode = config.mode
    prev_s = None
    for s in sample_times:
        s = float(s)
        if not math.isfinite(s):
            raise ValueError("sample times must be finite")
        if prev_s is not None and s < prev_s:
            raise ValueError("sample times must be sorted")
        prev_s = s
    times = train.times
    amps = train.amplitudes
    n = len(times)
    trace: list[tuple[float, float]] = []
    u = 0.0
    t_prev: float | None = None
    i = 0
    for s in sample_times:
        s = float(s)
        while i < n and times[i] <= s:
            if t_prev is not None:
                u *= decay_weight(alpha, times[i] - t_prev)
            u += amps[i]
            t_prev = times[i]
            if u >= theta or -u >= theta:
                _, u = _discharge(u, theta, mode)
            i += 1
        if t_prev is None:
            trace.append((s, 0.0))
        else:
            trace.append((s, u * decay_weight(alpha, s - t_prev)))
    return trace
