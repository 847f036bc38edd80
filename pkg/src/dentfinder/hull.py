"""Convex-hull baseline: counts gap regions between a blob and its filled
convex hull, the method curvature-based detection is compared against."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateHullError
from .raster import BinaryMask, _label_array

# Gaps smaller than this are rasterization slivers along hull edges, not
# real concavities.
DEFAULT_MIN_GAP_AREA = 4


@dataclass
class HullGapReport:
    """Gap regions between one blob and its convex hull."""

    gap_count: int
    gap_areas: list[int]  # pixel counts, discovery order
    hull_vertices: np.ndarray  # (h, 2) float, counter-clockwise


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> np.ndarray:
    """Counter-clockwise convex hull via Andrew's monotone chain.

    O(n log n); the returned vertices are a subset of the input points with
    no collinear interior vertices. Raises DegenerateHullError for fewer
    than 3 distinct points or an entirely collinear set.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) point array, got shape {pts.shape}")
    pts = np.unique(pts, axis=0)  # sorts lexicographically as a side effect
    if pts.shape[0] < 3:
        raise DegenerateHullError(
            f"hull needs at least 3 distinct points, got {pts.shape[0]}"
        )

    def half(sequence):
        out: list[np.ndarray] = []
        for p in sequence:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(pts[::-1])
    hull = np.array(lower[:-1] + upper[:-1])
    if hull.shape[0] < 3:
        raise DegenerateHullError("all points are collinear")
    return hull


def rasterize_hull(hull: np.ndarray, shape: tuple[int, int]) -> np.ndarray:
    """Boolean raster of the filled hull: pixel centers inside or on it.

    Containment is tested against every edge half-plane, which is exact for
    convex polygons and keeps pixels whose centers lie on the boundary, so
    the rasterized hull always covers the pixels it was built from.
    """
    height, width = shape
    out = np.zeros((height, width), dtype=bool)
    x0 = max(int(np.floor(hull[:, 0].min())), 0)
    x1 = min(int(np.ceil(hull[:, 0].max())), width - 1)
    y0 = max(int(np.floor(hull[:, 1].min())), 0)
    y1 = min(int(np.ceil(hull[:, 1].max())), height - 1)
    if x1 < x0 or y1 < y0:
        return out
    gy, gx = np.mgrid[y0 : y1 + 1, x0 : x1 + 1]
    inside = np.ones(gx.shape, dtype=bool)
    for (ax, ay), (bx, by) in zip(hull, np.roll(hull, -1, axis=0)):
        inside &= (bx - ax) * (gy - ay) - (by - ay) * (gx - ax) >= -1e-9
    out[y0 : y1 + 1, x0 : x1 + 1] = inside
    return out


def hull_gap_count(
    mask: BinaryMask, component_id: int, min_gap_area: int = DEFAULT_MIN_GAP_AREA
) -> HullGapReport:
    """Count gap regions between one blob and its filled convex hull.

    The hull of the blob's pixel centers is rasterized, the blob is
    subtracted, and 8-connected leftovers with at least min_gap_area pixels
    are counted as gaps.
    """
    if min_gap_area < 1:
        raise ValueError(f"min_gap_area must be at least 1, got {min_gap_area}")
    labels, count = _label_array(mask.pixels)
    if not 1 <= component_id <= count:
        raise ValueError(f"component {component_id} does not exist (mask has {count})")
    component = labels == component_id
    ys, xs = np.nonzero(component)
    hull = convex_hull(np.column_stack([xs, ys]))
    filled = rasterize_hull(hull, mask.pixels.shape)
    gap_labels, gap_count = _label_array(filled & ~component)
    areas = np.bincount(gap_labels.ravel(), minlength=gap_count + 1)[1:]
    kept = [int(a) for a in areas if a >= min_gap_area]
    return HullGapReport(gap_count=len(kept), gap_areas=kept, hull_vertices=hull)
