"""Spike trains and their elementary algebra.

A spike train is a finite, time-ordered sequence of weighted Dirac
impulses.  Simultaneous events are physically indistinguishable from
their aggregate, so :func:`from_events` merges them at construction;
everything downstream may rely on strictly increasing spike times.

All values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class Spike(NamedTuple):
    """One weighted impulse: a real-valued amplitude at a point in time."""

    time: float
    amplitude: float


@dataclass(frozen=True)
class SpikeTrain:
    """Immutable sequence of spikes with strictly increasing times.

    Zero-amplitude spikes are legal (``difference`` produces them to keep
    the full time support of error trains) but :func:`from_events` never
    creates them; use :meth:`normalize` to drop them.
    """

    times: tuple[float, ...] = ()
    amplitudes: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        times = tuple(float(t) for t in self.times)
        amps = tuple(float(a) for a in self.amplitudes)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "amplitudes", amps)
        if len(times) != len(amps):
            raise ValueError("times and amplitudes must have equal length")
        prev = None
        for i in range(len(times)):
            if not (math.isfinite(times[i]) and math.isfinite(amps[i])):
                raise ValueError(f"spike {i}: time and amplitude must be finite")
            if prev is not None and times[i] <= prev:
                raise ValueError(f"spike {i}: times must be strictly increasing")
            prev = times[i]

    def __len__(self) -> int:
        return len(self.times)

    def __iter__(self) -> Iterator[Spike]:
        return (Spike(t, a) for t, a in zip(self.times, self.amplitudes))

    @property
    def spikes(self) -> tuple[Spike, ...]:
        return tuple(self)

    def normalize(self) -> "SpikeTrain":
        """Drop exact-zero amplitudes (annihilates what ``difference`` kept)."""
        kept = [(t, a) for t, a in zip(self.times, self.amplitudes) if a != 0.0]
        return SpikeTrain(tuple(t for t, _ in kept), tuple(a for _, a in kept))


def from_events(events: Iterable[tuple[float, float]]) -> SpikeTrain:
    """Build a spike train from unordered ``(time, amplitude)`` pairs.

    Events are sorted by time; amplitudes at identical times are summed
    (instantaneous superposition) and exact-zero aggregates are dropped.

    Raises:
        ValueError: if any time or amplitude is non-finite; the message
            names the offending input index.
    """
    pairs: list[tuple[float, float]] = []
    for i, (t, a) in enumerate(events):
        t, a = float(t), float(a)
        if not (math.isfinite(t) and math.isfinite(a)):
            raise ValueError(f"event {i}: time and amplitude must be finite")
        pairs.append((t, a))
    pairs.sort(key=lambda p: p[0])
    times: list[float] = []
    amps: list[float] = []
    for t, a in pairs:
        if times and t == times[-1]:
            amps[-1] += a
        else:
            times.append(t)
            amps.append(a)
    kept = [(t, a) for t, a in zip(times, amps) if a != 0.0]
    return SpikeTrain(tuple(t for t, _ in kept), tuple(a for _, a in kept))


def superpose(trains: Sequence[SpikeTrain], weights: Sequence[float]) -> SpikeTrain:
    """Weighted superposition of several trains into a single channel."""
    if len(trains) != len(weights):
        raise ValueError("trains and weights must have equal length")
    events: list[tuple[float, float]] = []
    for train, w in zip(trains, weights):
        w = float(w)
        events.extend((t, w * a) for t, a in zip(train.times, train.amplitudes))
    return from_events(events)


def difference(a: SpikeTrain, b: SpikeTrain) -> SpikeTrain:
    """Pointwise ``a - b`` over the union of supports.

    Exact-zero amplitudes are retained so the result keeps the full time
    support; callers that want them gone should ``normalize()``.
    """
    times: list[float] = []
    amps: list[float] = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na or j < nb:
        if j >= nb or (i < na and a.times[i] < b.times[j]):
            times.append(a.times[i])
            amps.append(a.amplitudes[i])
            i += 1
        elif i >= na or b.times[j] < a.times[i]:
            times.append(b.times[j])
            amps.append(-b.amplitudes[j])
            j += 1
        else:
            times.append(a.times[i])
            amps.append(a.amplitudes[i] - b.amplitudes[j])
            i += 1
            j += 1
    return SpikeTrain(tuple(times), tuple(amps))


def scale(train: SpikeTrain, c: float) -> SpikeTrain:
    """Multiply every amplitude by ``c``; exact zeros are dropped."""
    c = float(c)
    if not math.isfinite(c):
        raise ValueError("scale factor must be finite")
    kept = [(t, c * a) for t, a in zip(train.times, train.amplitudes) if c * a != 0.0]
    return SpikeTrain(tuple(t for t, _ in kept), tuple(a for _, a in kept))
