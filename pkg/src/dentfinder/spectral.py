"""Frequency-domain boundary machinery: transforms, spectral differentiation,
and brick-wall low-pass filtering of coordinate channels."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .trace import BoundaryTrace


@dataclass
class SpectralCurve:
    """DFT coefficients of a trace's x and y coordinate channels."""

    n: int
    fx: np.ndarray  # complex, length n
    fy: np.ndarray  # complex, length n


@dataclass
class DerivativeOperator:
    """Per-bin frequency-domain multipliers for d/dt or d2/dt2."""

    order: int
    coefficients: np.ndarray  # complex, length n


def forward(trace: BoundaryTrace) -> SpectralCurve:
    """Transform both coordinate channels to the frequency domain.

    Any sample count is supported, in O(n log n) total.
    """
    return SpectralCurve(n=trace.n, fx=np.fft.fft(trace.xs), fy=np.fft.fft(trace.ys))


def inverse(curve: SpectralCurve) -> np.ndarray:
    """Reconstruct spatial-domain (n, 2) coordinates from a spectral curve."""
    return np.column_stack([np.fft.ifft(curve.fx).real, np.fft.ifft(curve.fy).real])


def derivative_operator(n: int, order: int) -> DerivativeOperator:
    """Build the frequency-domain differential operator for n samples.

    Bin k carries (i*w_k)^order with w_k = 2*pi*k/n the signed angular
    frequency; mirror bins n-k carry the conjugate-frequency value. The DC
    bin is zero and, for even n, the Nyquist bin is left at zero for both
    orders.
    """
    if n < 2:
        raise ValueError(f"operator needs at least 2 samples, got {n}")
    if order not in (1, 2):
        raise ValueError(f"unsupported derivative order {order}")
    coefficients = np.zeros(n, dtype=complex)
    half = math.ceil(n / 2) - 1  # highest mirrored harmonic; excludes Nyquist
    k = np.arange(1, half + 1)
    w = 2.0 * np.pi * k / n
    if order == 1:
        coefficients[k] = 1j * w
        coefficients[n - k] = -1j * w
    else:
        coefficients[k] = -(w**2)
        coefficients[n - k] = -(w**2)
    return DerivativeOperator(order=order, coefficients=coefficients)


def apply_lowpass(curve: SpectralCurve, keep: int) -> SpectralCurve:
    """Brick-wall low-pass: zero every bin whose harmonic index exceeds keep.

    `keep` counts retained harmonics per side; the DC bin always survives
    and keep = n // 2 passes the curve through unchanged. Conjugate
    symmetry is preserved, so filtered curves reconstruct as real.
    """
    n = curve.n
    if not 0 <= keep <= n // 2:
        raise ValueError(f"harmonic count {keep} outside [0, {n // 2}]")
    bins = np.arange(n)
    passed = np.minimum(bins, n - bins) <= keep
    return SpectralCurve(
        n=n,
        fx=np.where(passed, curve.fx, 0.0),
        fy=np.where(passed, curve.fy, 0.0),
    )


def reconstruct_derivative(
    curve: SpectralCurve, op: DerivativeOperator
) -> tuple[np.ndarray, np.ndarray]:
    """Differentiate both channels in the frequency domain and return the
    spatial-domain derivative sequences (dx, dy).

    The tiny imaginary residue of the inverse transform is discarded; for
    real input curves it stays at rounding-noise level.
    """
    if op.coefficients.shape[0] != curve.n:
        raise ValueError(
            f"operator length {op.coefficients.shape[0]} does not match curve length {curve.n}"
        )
    dx = np.fft.ifft(curve.fx * op.coefficients).real
    dy = np.fft.ifft(curve.fy * op.coefficients).real
    return dx, dy
