import numpy as np
import pytest
from scipy.spatial import ConvexHull as QhullReference

from dentfinder import (
    BinaryMask,
    DegenerateHullError,
    Dip,
    DippedCircleSpec,
    PolarShapeSpec,
    Severity,
    convex_hull,
    count_indentations,
    curvature_profile,
    hull_gap_count,
    polar_trace,
    rasterize,
    trace_boundary,
)
from dentfinder.hull import rasterize_hull
from dentfinder.trace import shoelace_area

from oracles import inside_or_on_hull


def pacman_mask(radius=80, mouth=0.45, size=256):
    yy, xx = np.mgrid[0:size, 0:size]
    c = (size - 1) / 2.0
    dist = np.hypot(xx - c, yy - c)
    angle = np.arctan2(yy - c, xx - c)
    wedge = (np.abs(angle) < mouth) & (dist > 12)
    return BinaryMask(pixels=(dist < radius) & ~wedge)


def nested_notch_spec(samples=2048):
    # one wide concavity holding two sharp dents: the hull bridges the whole
    # concavity as a single gap while curvature resolves both dents
    mid = np.pi / 2
    return DippedCircleSpec(
        radius=130,
        dips=(
            Dip(location=mid, depth=35, width=0.30),
            Dip(location=mid - 0.20, depth=14, width=0.08),
            Dip(location=mid + 0.20, depth=14, width=0.08),
        ),
        samples=samples,
        center=(255.5, 255.5),
    )


class TestConvexHull:
    def test_square_with_interior_point(self):
        pts = [(0, 0), (1, 0), (1, 1), (0, 1), (0.5, 0.5)]
        hull = convex_hull(pts)
        assert hull.shape == (4, 2)
        assert shoelace_area(hull) == pytest.approx(1.0)

    def test_counter_clockwise(self):
        rng = np.random.default_rng(17)
        hull = convex_hull(rng.normal(size=(50, 2)))
        assert shoelace_area(hull) > 0

    def test_collinear_points_degenerate(self):
        with pytest.raises(DegenerateHullError):
            convex_hull([(0, 0), (1, 1), (2, 2), (3, 3)])

    def test_too_few_points(self):
        with pytest.raises(DegenerateHullError):
            convex_hull([(0, 0), (1, 1)])

    def test_random_disk_points(self):
        rng = np.random.default_rng(23)
        r = np.sqrt(rng.uniform(0, 1, 100))
        a = rng.uniform(0, 2 * np.pi, 100)
        pts = np.column_stack([r * np.cos(a), r * np.sin(a)])
        hull = convex_hull(pts)
        # hull vertices come from the input set
        as_set = {tuple(p) for p in pts}
        assert all(tuple(v) in as_set for v in hull)
        # every input point is inside or on the hull (brute force)
        assert inside_or_on_hull(hull, pts)

    def test_matches_qhull_reference(self):
        rng = np.random.default_rng(29)
        pts = rng.normal(size=(200, 2))
        ours = {tuple(v) for v in convex_hull(pts)}
        reference = {tuple(pts[i]) for i in QhullReference(pts).vertices}
        assert ours == reference

    def test_duplicate_points_tolerated(self):
        pts = [(0, 0), (2, 0), (2, 2), (0, 2), (2, 0), (0, 0)]
        assert convex_hull(pts).shape == (4, 2)


class TestRasterizeHull:
    def test_covers_source_pixels(self):
        for spec in (
            PolarShapeSpec(radius=10, samples=256, center=(31.5, 31.5)),
            PolarShapeSpec(radius=11, amplitude=3, lobes=4, samples=512, center=(31.5, 31.5)),
        ):
            mask = rasterize(spec, 64, 64)
            ys, xs = np.nonzero(mask.pixels)
            hull = convex_hull(np.column_stack([xs, ys]))
            filled = rasterize_hull(hull, mask.pixels.shape)
            assert np.all(filled[mask.pixels])  # blob subset of rasterized hull

    def test_clip_to_canvas(self):
        hull = np.array([(-5.0, -5.0), (3.0, -5.0), (3.0, 3.0), (-5.0, 3.0)])
        filled = rasterize_hull(hull, (4, 4))
        assert filled[:4, :4].all()


class TestHullGapCount:
    def test_convex_disk_has_no_gaps(self):
        spec = PolarShapeSpec(radius=20, samples=512, center=(31.5, 31.5))
        mask = rasterize(spec, 64, 64)
        report = hull_gap_count(mask, 1, min_gap_area=4)
        assert report.gap_count == 0
        assert report.gap_areas == []

    def test_pacman_has_one_gap(self):
        report = hull_gap_count(pacman_mask(), 1)
        assert report.gap_count == 1
        assert report.gap_areas[0] > 1000  # the mouth is a large wedge

    def test_min_gap_area_filters_small_notch(self):
        grid = np.zeros((16, 16), dtype=bool)
        grid[4:12, 4:12] = True
        grid[7, 11] = False  # single-pixel nick in one edge
        report = hull_gap_count(BinaryMask(pixels=grid), 1, min_gap_area=4)
        assert report.gap_count == 0
        report = hull_gap_count(BinaryMask(pixels=grid), 1, min_gap_area=1)
        assert report.gap_count == 1
        assert report.gap_areas == [1]

    def test_translation_invariance(self):
        base = pacman_mask(radius=40, size=128)
        shifted = np.zeros((160, 160), dtype=bool)
        shifted[21 : 21 + 128, 9 : 9 + 128] = base.pixels
        a = hull_gap_count(base, 1)
        b = hull_gap_count(BinaryMask(pixels=shifted), 1)
        assert a.gap_count == b.gap_count
        assert a.gap_areas == b.gap_areas

    def test_degenerate_component(self):
        grid = np.zeros((4, 16), dtype=bool)
        grid[1, 2:14] = True  # 12 collinear pixels
        with pytest.raises(DegenerateHullError):
            hull_gap_count(BinaryMask(pixels=grid), 1)

    def test_unknown_component(self):
        with pytest.raises(ValueError, match="does not exist"):
            hull_gap_count(pacman_mask(), 5)

    def test_min_gap_area_validation(self):
        with pytest.raises(ValueError):
            hull_gap_count(pacman_mask(), 1, min_gap_area=0)


class TestDivergenceFromCurvature:
    def test_nested_notch_one_gap_but_two_indentations(self):
        spec = nested_notch_spec()
        mask = rasterize(spec, 512, 512)
        assert hull_gap_count(mask, 1).gap_count == 1
        profile = curvature_profile(polar_trace(spec))
        assert count_indentations(profile, Severity(0.05)).count == 2

    def test_nested_notch_from_raster_route(self):
        spec = nested_notch_spec()
        mask = rasterize(spec, 512, 512)
        trace = trace_boundary(mask, 1)
        profile = curvature_profile(trace, lowpass=32)
        assert count_indentations(profile, Severity(0.05)).count == 2

    def test_pacman_agreement_case(self):
        mask = pacman_mask()
        assert hull_gap_count(mask, 1).gap_count == 1
        profile = curvature_profile(trace_boundary(mask, 1), lowpass=16)
        assert count_indentations(profile, Severity(0.05)).count == 1
