"""Property tests over randomized inputs for the spec-level invariants."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from dentfinder import (
    BoundaryTrace,
    Severity,
    apply_lowpass,
    count_indentations,
    curvature_profile,
    forward,
    inverse,
    severity_from_radius,
)

from oracles import random_harmonic_shape


def raw_trace(rng, n):
    return BoundaryTrace(points=rng.uniform(-50, 50, size=(n, 2)))


@given(n=st.integers(8, 300), seed=st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_round_trip_identity(n, seed):
    rng = np.random.default_rng(seed)
    trace = raw_trace(rng, n)
    back = inverse(forward(trace))
    scale = max(np.abs(trace.points).max(), 1.0)
    assert np.abs(back - trace.points).max() < 1e-9 * scale


@given(n=st.integers(8, 120), seed=st.integers(0, 2**32 - 1), data=st.data())
@settings(max_examples=40, deadline=None)
def test_lowpass_idempotent_and_nested(n, seed, data):
    rng = np.random.default_rng(seed)
    curve = forward(raw_trace(rng, n))
    keep = data.draw(st.integers(0, n // 2))
    once = apply_lowpass(curve, keep)
    twice = apply_lowpass(once, keep)
    assert np.array_equal(once.fx, twice.fx)
    assert np.array_equal(once.fy, twice.fy)
    # a wider filter leaves a narrower result unchanged
    wider = data.draw(st.integers(keep, n // 2))
    assert np.array_equal(apply_lowpass(once, wider).fx, once.fx)


@given(rho=st.floats(1e-6, 1e6, allow_nan=False, allow_infinity=False))
def test_severity_radius_round_trip(rho):
    severity = severity_from_radius(rho)
    assert abs(severity.rho_sigma - rho) <= 1e-9 * rho
    assert abs(severity_from_radius(severity.rho_sigma).sigma - severity.sigma) <= 1e-12


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=15, deadline=None)
def test_count_monotone_in_sigma(seed):
    rng = np.random.default_rng(seed)
    trace, _ = random_harmonic_shape(rng, n=256)
    profile = curvature_profile(trace)
    ladder = [
        count_indentations(profile, Severity(s)).count
        for s in (1e-4, 1e-3, 1e-2, 5e-2, 1e-1, 1.0)
    ]
    assert all(a >= b for a, b in zip(ladder, ladder[1:]))


@given(seed=st.integers(0, 2**32 - 1), shift=st.integers(1, 255))
@settings(max_examples=15, deadline=None)
def test_count_start_invariant(seed, shift):
    rng = np.random.default_rng(seed)
    trace, _ = random_harmonic_shape(rng, n=256)
    rolled = BoundaryTrace.from_points(np.roll(trace.points, -shift, axis=0))
    base = count_indentations(curvature_profile(trace), Severity(0.01)).count
    moved = count_indentations(curvature_profile(rolled), Severity(0.01)).count
    assert base == moved


@given(seed=st.integers(0, 2**32 - 1),
       dx=st.floats(-1e4, 1e4, allow_nan=False),
       dy=st.floats(-1e4, 1e4, allow_nan=False))
@settings(max_examples=15, deadline=None)
def test_translation_leaves_curvature(seed, dx, dy):
    rng = np.random.default_rng(seed)
    trace, _ = random_harmonic_shape(rng, n=256)
    moved = BoundaryTrace.from_points(trace.points + [dx, dy])
    base = curvature_profile(trace).kappa
    assert np.abs(curvature_profile(moved).kappa - base).max() < 1e-9
