import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spikequant import SpikeTrain, difference, from_events, scale, superpose

finite_times = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False, allow_infinity=False)
finite_amps = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
events = st.lists(st.tuples(finite_times, finite_amps), max_size=40)
trains = events.map(from_events)


def test_simultaneous_events_are_summed():
    t = from_events([(1.0, 0.5), (1.0, 0.25)])
    assert t.times == (1.0,)
    assert t.amplitudes == (0.75,)


def test_empty_input_gives_empty_train():
    assert len(from_events([])) == 0


def test_zero_aggregates_are_dropped():
    t = from_events([(2.0, 1.0), (1.0, -1.0), (2.0, -1.0)])
    assert t.times == (1.0,)
    assert t.amplitudes == (-1.0,)


def test_from_events_rejects_non_finite_and_names_index():
    with pytest.raises(ValueError, match="event 1"):
        from_events([(0.0, 1.0), (1.0, math.nan)])
    with pytest.raises(ValueError, match="event 0"):
        from_events([(math.inf, 1.0)])


def test_spike_train_validates_ordering_and_length():
    with pytest.raises(ValueError, match="strictly increasing"):
        SpikeTrain((1.0, 1.0), (1.0, 2.0))
    with pytest.raises(ValueError, match="equal length"):
        SpikeTrain((1.0,), (1.0, 2.0))
    with pytest.raises(ValueError, match="finite"):
        SpikeTrain((0.0,), (math.inf,))


def test_spike_train_is_immutable():
    t = from_events([(0.0, 1.0)])
    with pytest.raises(AttributeError):
        t.times = (2.0,)


@given(events)
def test_from_events_idempotent_on_own_output(evts):
    once = from_events(evts)
    twice = from_events(list(once))
    assert once == twice


def test_superpose_identity_and_zero_weight():
    t = from_events([(0.0, 1.0), (2.0, -0.5)])
    assert superpose([t], [1.0]) == t
    assert len(superpose([t], [0.0])) == 0


def test_superpose_aggregates_simultaneous_spikes():
    a = from_events([(1.0, 0.6)])
    b = from_events([(1.0, 0.6)])
    merged = superpose([a, b], [1.0, 1.0])
    assert merged.times == (1.0,)
    assert merged.amplitudes == (1.2,)


def test_superpose_rejects_length_mismatch():
    with pytest.raises(ValueError, match="equal length"):
        superpose([from_events([])], [1.0, 2.0])


@given(trains, trains, st.floats(-8, 8), st.floats(-8, 8))
def test_superpose_is_linear(a, b, x, y):
    via_superpose = superpose([a, b], [x, y])
    via_scale = from_events(list(scale(a, x)) + list(scale(b, y)))
    assert via_superpose == via_scale


def test_self_difference_keeps_support_with_zeros():
    t = from_events([(0.0, 1.0), (1.0, 2.0)])
    d = difference(t, t)
    assert d.times == t.times
    assert d.amplitudes == (0.0, 0.0)
    assert len(d.normalize()) == 0


def test_difference_with_empty_is_identity():
    t = from_events([(0.0, 1.0), (1.0, 2.0)])
    assert difference(t, from_events([])) == t


def test_difference_over_union_of_supports():
    d = difference(from_events([(1.0, 2.0)]), from_events([(1.0, 1.0), (2.0, 1.0)]))
    assert d.times == (1.0, 2.0)
    assert d.amplitudes == (1.0, -1.0)


@given(trains, trains)
@settings(max_examples=200)
def test_difference_readded_recovers_left_operand(a, b):
    d = difference(a, b).normalize()
    recovered = superpose([d, b], [1.0, 1.0])
    # rounding in (x - y) + y can absorb amplitudes far below the data
    # scale, so compare as functions of time at 1e-12 of that scale
    scale_bound = max((abs(x) for t in (a, b) for x in t.amplitudes), default=1.0)
    tol = 1e-12 * max(scale_bound, 1.0)
    got = dict(zip(recovered.times, recovered.amplitudes))
    want = dict(zip(a.times, a.amplitudes))
    for t in set(got) | set(want):
        assert abs(got.get(t, 0.0) - want.get(t, 0.0)) <= tol


def test_scale_examples():
    t = from_events([(1.0, 0.5)])
    assert scale(t, 1.0) == t
    assert scale(t, -1.0).amplitudes == (-0.5,)
    assert scale(t, 3.0).amplitudes == (1.5,)
    assert len(scale(t, 0.0)) == 0


def test_scale_rejects_non_finite():
    with pytest.raises(ValueError, match="finite"):
        scale(from_events([(0.0, 1.0)]), math.nan)


def test_spikes_unpack_as_pairs():
    t = from_events([(0.0, 1.0), (1.0, 2.0)])
    assert [(s.time, s.amplitude) for s in t.spikes] == [(0.0, 1.0), (1.0, 2.0)]
    assert [tuple(s) for s in t] == [(0.0, 1.0), (1.0, 2.0)]
