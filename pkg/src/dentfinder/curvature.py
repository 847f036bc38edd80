"""Signed curvature of closed boundary traces via spectral differentiation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCurveError
from .spectral import apply_lowpass, derivative_operator, forward, reconstruct_derivative
from .trace import BoundaryTrace

# Squared-speed floor below which the parameterization is considered degenerate.
SPEED_FLOOR = 1e-12

# |kappa| below this is treated as a flat point with unbounded radius.
FLAT_KAPPA = 1e-12


@dataclass
class CurvatureProfile:
    """Per-sample signed curvature of a boundary trace, units 1/pixel.

    Positive curvature marks convex stretches of the counter-clockwise
    curve; negative curvature marks concavities.
    """

    kappa: np.ndarray
    trace: BoundaryTrace | None = None
    lowpass_k: int | None = None
    speed: np.ndarray | None = None  # |(dx, dy)| per sample

    @property
    def n(self) -> int:
        return self.kappa.shape[0]


@dataclass
class RadiusOfCurvature:
    """Radius of the osculating circle at one sample; rho = 1/|kappa|."""

    rho: float
    unbounded: bool = False


def curvature_profile(trace: BoundaryTrace, lowpass: int | None = None) -> CurvatureProfile:
    """Compute the signed curvature at every trace sample.

    Both coordinate channels are differentiated spectrally:

        kappa = (dx*ddy - dy*ddx) / (dx^2 + dy^2)^(3/2)

    `lowpass` optionally keeps only that many harmonics of each channel
    before differentiating, suppressing pixelization noise. Sign
    convention: a counter-clockwise circle of radius R has kappa = +1/R
    everywhere.
    """
    curve = forward(trace)
    if lowpass is not None:
        curve = apply_lowpass(curve, lowpass)
    dx, dy = reconstruct_derivative(curve, derivative_operator(curve.n, 1))
    ddx, ddy = reconstruct_derivative(curve, derivative_operator(curve.n, 2))
    speed_sq = dx * dx + dy * dy
    worst = int(np.argmin(speed_sq))
    if float(speed_sq[worst]) < SPEED_FLOOR:
        raise DegenerateCurveError(
            f"near-zero speed at sample {worst}: the parameterization is degenerate; "
            "low-pass filtering or chord-length resampling may help"
        )
    kappa = (dx * ddy - dy * ddx) / speed_sq**1.5
    if not np.all(np.isfinite(kappa)):
        raise DegenerateCurveError("curvature is not finite at every sample")
    return CurvatureProfile(
        kappa=kappa, trace=trace, lowpass_k=lowpass, speed=np.sqrt(speed_sq)
    )


def radius_at(profile: CurvatureProfile, i: int) -> RadiusOfCurvature:
    """Radius of curvature at sample i; unbounded where |kappa| ~ 0."""
    if not 0 <= i < profile.n:
        raise IndexError(f"sample index {i} outside [0, {profile.n})")
    k = abs(float(profile.kappa[i]))
    if k < FLAT_KAPPA:
        return RadiusOfCurvature(rho=math.inf, unbounded=True)
    return RadiusOfCurvature(rho=1.0 / k)


def total_turning(profile: CurvatureProfile) -> float:
    """Speed-weighted curvature integral around the closed curve, in turns.

    Simple counter-clockwise curves give +1 (the winding number); useful
    as a sanity check on a computed profile.
    """
    if profile.speed is None:
        raise ValueError("profile carries no speed data")
    return float(np.dot(profile.kappa, profile.speed)) / (2.0 * np.pi)
