"""Indentation detection: curvature-sign segmentation and the severity rule."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curvature import CurvatureProfile


@dataclass(frozen=True)
class Severity:
    """Curvature-magnitude threshold for accepting an indentation.

    Equivalently, 1/sigma is the largest radius of curvature the tightest
    bend of a concave region may have and still count.
    """

    sigma: float

    def __post_init__(self):
        if not (np.isfinite(self.sigma) and self.sigma > 0):
            raise ValueError(f"sigma must be positive and finite, got {self.sigma}")

    @property
    def rho_sigma(self) -> float:
        return 1.0 / self.sigma


def severity_from_radius(rho_sigma: float) -> Severity:
    """Severity equivalent to a maximum radius of curvature in pixels."""
    if not (np.isfinite(rho_sigma) and rho_sigma > 0):
        raise ValueError(f"radius must be positive and finite, got {rho_sigma}")
    return Severity(sigma=1.0 / rho_sigma)


@dataclass
class CurvatureRegion:
    """Maximal run of same-sign curvature samples; cyclic, ends inclusive."""

    start: int
    end: int
    sign: int
    mean_kappa: float
    peak_abs_kappa: float
    peak_index: int
    length: int
    degenerate: bool = False  # set when the whole profile was exactly zero

    def indices(self, n: int) -> np.ndarray:
        """Sample indices covered by the region, in cyclic order."""
        return np.arange(self.start, self.start + self.length) % n


@dataclass
class IndentationReport:
    """Accepted indentation regions for one profile at one severity."""

    count: int
    regions: list[CurvatureRegion]
    sigma: float
    n: int


def _resolved_signs(kappa: np.ndarray) -> tuple[np.ndarray, bool]:
    """Per-sample sign with exact zeros absorbed into the preceding run.

    Zeros take the sign of the previous non-zero sample; zeros before the
    first non-zero sample take that first sample's sign. An all-zero
    profile resolves to +1 everywhere and is flagged degenerate.
    """
    signs = np.sign(kappa).astype(int)
    nonzero = np.flatnonzero(signs)
    if nonzero.size == 0:
        return np.ones(signs.shape[0], dtype=int), True
    source = np.where(signs != 0, np.arange(signs.shape[0]), -1)
    source = np.maximum.accumulate(source)
    source[source < 0] = nonzero[0]
    return signs[source], False


def _make_region(
    kappa: np.ndarray, sign: int, start: int, length: int, degenerate: bool = False
) -> CurvatureRegion:
    n = kappa.shape[0]
    idx = np.arange(start, start + length) % n
    values = kappa[idx]
    peak_local = int(np.argmax(np.abs(values)))
    return CurvatureRegion(
        start=int(start),
        end=int((start + length - 1) % n),
        sign=int(sign),
        mean_kappa=float(values.mean()),
        peak_abs_kappa=float(abs(values[peak_local])),
        peak_index=int(idx[peak_local]),
        length=int(length),
        degenerate=degenerate,
    )


def segment_regions(profile: CurvatureProfile) -> list[CurvatureRegion]:
    """Partition the cyclic curvature profile into maximal same-sign runs.

    Runs are cyclic: a run crossing the start index is reported once, with
    start/end in original sample coordinates, so the arbitrary trace start
    never splits a region. Regions tile the profile without overlap.
    """
    kappa = np.asarray(profile.kappa, dtype=float)
    if not np.all(np.isfinite(kappa)):
        raise ValueError("profile must be finite")
    n = kappa.shape[0]
    signs, degenerate = _resolved_signs(kappa)
    starts = np.flatnonzero(signs != np.roll(signs, 1))
    if starts.size == 0:
        return [_make_region(kappa, signs[0], 0, n, degenerate)]
    regions = []
    for j, start in enumerate(starts):
        following = starts[(j + 1) % starts.size]
        length = (following - start) % n or n
        regions.append(_make_region(kappa, signs[start], int(start), int(length)))
    return regions


def count_indentations(profile: CurvatureProfile, severity: Severity) -> IndentationReport:
    """Count concave regions whose sharpest bend exceeds the severity.

    A region is an indentation when its mean curvature is negative and its
    peak |kappa| strictly exceeds severity.sigma, i.e. the tightest bend
    has radius of curvature below severity.rho_sigma.
    """
    regions = segment_regions(profile)
    accepted = [
        r for r in regions if r.mean_kappa < 0 and r.peak_abs_kappa > severity.sigma
    ]
    return IndentationReport(
        count=len(accepted), regions=accepted, sigma=severity.sigma, n=profile.n
    )
