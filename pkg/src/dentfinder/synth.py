"""Synthetic boundary shapes with closed-form curvature, for tests, demos,
and calibration: polar roses, circles with localized dents, and a
rasterizer that turns either into a mask."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .raster import BinaryMask
from .trace import MIN_TRACE_POINTS, BoundaryTrace


@dataclass(frozen=True)
class PolarShapeSpec:
    """Rose curve r(theta) = radius + amplitude * cos(lobes * theta).

    amplitude = 0 or lobes = 0 degenerates to a circle. radius > amplitude
    keeps r positive, so the curve is star-shaped and simple.
    """

    radius: float
    amplitude: float = 0.0
    lobes: int = 0
    samples: int = 256
    center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if not 0 <= self.amplitude < self.radius:
            raise ValueError(
                f"need radius > amplitude >= 0, got radius={self.radius} "
                f"amplitude={self.amplitude}"
            )
        if self.lobes < 0:
            raise ValueError(f"lobe count must be non-negative, got {self.lobes}")
        if self.samples < MIN_TRACE_POINTS:
            raise ValueError(f"need at least {MIN_TRACE_POINTS} samples, got {self.samples}")

    @property
    def max_radius(self) -> float:
        return self.radius + self.amplitude

    def profile(self, theta: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Radius and its first two angular derivatives at each angle."""
        m = self.lobes
        a = self.amplitude
        r = self.radius + a * np.cos(m * theta)
        dr = -a * m * np.sin(m * theta)
        ddr = -a * m * m * np.cos(m * theta)
        return r, dr, ddr


@dataclass(frozen=True)
class Dip:
    """One localized inward dent: a periodic Gaussian-like bump
    depth * exp((cos(theta - location) - 1) / width^2), width in radians."""

    location: float
    depth: float
    width: float

    def __post_init__(self):
        if not self.depth > 0:
            raise ValueError(f"dip depth must be positive, got {self.depth}")
        if not self.width > 0:
            raise ValueError(f"dip width must be positive, got {self.width}")


@dataclass(frozen=True)
class DippedCircleSpec:
    """Circle with smooth localized dents carved inward.

    The summed dent depth must stay below the radius so r stays positive
    and the curve remains simple.
    """

    radius: float
    dips: tuple[Dip, ...]
    samples: int = 1024
    center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if sum(d.depth for d in self.dips) >= self.radius:
            raise ValueError("summed dip depth must stay below the radius")
        if self.samples < MIN_TRACE_POINTS:
            raise ValueError(f"need at least {MIN_TRACE_POINTS} samples, got {self.samples}")

    @property
    def max_radius(self) -> float:
        return self.radius  # dips only carve inward

    def profile(self, theta: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Radius and its first two angular derivatives at each angle."""
        theta = np.asarray(theta, dtype=float)
        r = np.full(theta.shape, self.radius, dtype=float)
        dr = np.zeros(theta.shape, dtype=float)
        ddr = np.zeros(theta.shape, dtype=float)
        for dip in self.dips:
            c = 1.0 / (dip.width * dip.width)
            delta = theta - dip.location
            sin = np.sin(delta)
            cos = np.cos(delta)
            g = np.exp(c * (cos - 1.0))
            r -= dip.depth * g
            dr += dip.depth * c * sin * g
            ddr -= dip.depth * (c * c * sin * sin - c * cos) * g
        return r, dr, ddr


def _angles(spec) -> np.ndarray:
    return 2.0 * np.pi * np.arange(spec.samples) / spec.samples


def polar_trace(spec) -> BoundaryTrace:
    """Sample a polar spec counter-clockwise into a boundary trace."""
    theta = _angles(spec)
    r, _, _ = spec.profile(theta)
    cx, cy = spec.center
    points = np.column_stack([cx + r * np.cos(theta), cy + r * np.sin(theta)])
    return BoundaryTrace.from_points(points)


def polar_curvature_oracle(spec) -> np.ndarray:
    """Closed-form signed curvature at each sample angle.

    Standard polar identity kappa = (r^2 + 2 r'^2 - r r'') /
    (r^2 + r'^2)^(3/2); independent of the spectral pipeline, so it serves
    as the reference the pipeline is checked against.
    """
    r, dr, ddr = spec.profile(_angles(spec))
    return (r * r + 2.0 * dr * dr - r * ddr) / (r * r + dr * dr) ** 1.5


def rasterize(shape, width: int, height: int) -> BinaryMask:
    """Rasterize a polar spec or a trace: pixel centers inside the closed
    curve (even-odd rule) become foreground.

    Polar specs use the exact star-shaped containment test; traces use a
    scanline even-odd crossing test against the closed polygon. The shape
    must fit inside the canvas.
    """
    if width < 1 or height < 1:
        raise ValueError(f"canvas must be at least 1x1, got {width}x{height}")
    if isinstance(shape, BoundaryTrace):
        pts = shape.points
        if (
            pts[:, 0].min() < 0
            or pts[:, 0].max() > width - 1
            or pts[:, 1].min() < 0
            or pts[:, 1].max() > height - 1
        ):
            raise ValueError(f"trace does not fit the {width}x{height} canvas")
        return BinaryMask(pixels=_rasterize_polygon(pts, width, height))
    cx, cy = shape.center
    rmax = shape.max_radius
    if cx - rmax < 0 or cx + rmax > width - 1 or cy - rmax < 0 or cy + rmax > height - 1:
        raise ValueError(
            f"shape of radius {rmax:g} at ({cx:g}, {cy:g}) does not fit the "
            f"{width}x{height} canvas"
        )
    gy, gx = np.mgrid[0:height, 0:width]
    dx = gx - cx
    dy = gy - cy
    r, _, _ = shape.profile(np.arctan2(dy, dx))
    return BinaryMask(pixels=dx * dx + dy * dy < r * r)


def _rasterize_polygon(points: np.ndarray, width: int, height: int) -> np.ndarray:
    """Even-odd scanline fill; vertical edge intervals are half-open so
    vertices are not double counted."""
    x1 = points[:, 0]
    y1 = points[:, 1]
    x2 = np.roll(x1, -1)
    y2 = np.roll(y1, -1)
    sloped = y1 != y2  # horizontal edges never cross a half-open span
    x1, y1, x2, y2 = x1[sloped], y1[sloped], x2[sloped], y2[sloped]
    ymin = np.minimum(y1, y2)
    ymax = np.maximum(y1, y2)
    out = np.zeros((height, width), dtype=bool)
    for row in range(height):
        hit = (ymin <= row) & (row < ymax)
        if not hit.any():
            continue
        t = (row - y1[hit]) / (y2[hit] - y1[hit])
        crossings = np.sort(x1[hit] + t * (x2[hit] - x1[hit]))
        for left, right in zip(crossings[0::2], crossings[1::2]):
            a = max(int(np.ceil(left)), 0)
            b = min(int(np.ceil(right)) - 1, width - 1)
            if b >= a:
                out[row, a : b + 1] = True
    return out
