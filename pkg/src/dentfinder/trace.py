"""Closed boundary traces: validation, orientation, and resampling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TraceError

# Below this many samples the discrete derivatives along the curve carry no
# usable information, so such traces are rejected outright.
MIN_TRACE_POINTS = 8


def shoelace_area(points: np.ndarray) -> float:
    """Signed area of the closed polygon; positive for counter-clockwise order."""
    pts = np.asarray(points, dtype=float)
    x = pts[:, 0]
    y = pts[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


@dataclass
class BoundaryTrace:
    """Ordered closed sequence of boundary points, counter-clockwise.

    Invariants: no consecutive duplicate points, the start point is not
    repeated at the end, at least MIN_TRACE_POINTS samples, and positive
    shoelace area. Build instances through :meth:`from_points`, which
    normalizes raw input into this form.
    """

    points: np.ndarray  # (n, 2) float64, columns x, y

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def xs(self) -> np.ndarray:
        return self.points[:, 0]

    @property
    def ys(self) -> np.ndarray:
        return self.points[:, 1]

    @property
    def area(self) -> float:
        return shoelace_area(self.points)

    @classmethod
    def from_points(cls, points) -> "BoundaryTrace":
        """Validate and normalize a raw point sequence into a trace.

        Drops an explicit closing duplicate and any consecutive repeats,
        then orients the sequence counter-clockwise.
        """
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise TraceError(f"expected an (n, 2) point array, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise TraceError("trace points must be finite")
        if pts.shape[0] >= 2 and np.array_equal(pts[0], pts[-1]):
            pts = pts[:-1]
        if pts.shape[0] >= 2:
            keep = np.any(pts != np.roll(pts, 1, axis=0), axis=1)
            keep[0] = True  # the roll compares point 0 against the last point
            pts = pts[keep]
        if pts.shape[0] < MIN_TRACE_POINTS:
            raise TraceError(
                f"trace of {pts.shape[0]} points is shorter than the minimum {MIN_TRACE_POINTS}"
            )
        area = shoelace_area(pts)
        if area == 0.0:
            raise TraceError("degenerate trace: zero enclosed area")
        if area < 0.0:
            pts = pts[::-1]
        return cls(points=np.ascontiguousarray(pts))


def resample_uniform(trace: BoundaryTrace, samples: int) -> BoundaryTrace:
    """Resample a trace to `samples` points at uniform chord-length spacing.

    Linear interpolation along the closed polyline, starting at the original
    start point. Useful for traces with wildly nonuniform point spacing.
    """
    if samples < MIN_TRACE_POINTS:
        raise TraceError(f"cannot resample to {samples} points (minimum {MIN_TRACE_POINTS})")
    closed = np.vstack([trace.points, trace.points[:1]])
    seg = np.hypot(np.diff(closed[:, 0]), np.diff(closed[:, 1]))
    s = np.concatenate([[0.0], np.cumsum(seg)])
    targets = np.arange(samples) * (s[-1] / samples)
    xs = np.interp(targets, s, closed[:, 0])
    ys = np.interp(targets, s, closed[:, 1])
    return BoundaryTrace.from_points(np.column_stack([xs, ys]))
