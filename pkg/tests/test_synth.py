import numpy as np
import pytest

from dentfinder import (
    Dip,
    DippedCircleSpec,
    PolarShapeSpec,
    Severity,
    count_indentations,
    curvature_profile,
    polar_curvature_oracle,
    polar_trace,
    rasterize,
    trace_boundary,
)

from oracles import polar_kappa, segments_self_intersect

ROSE = PolarShapeSpec(radius=100, amplitude=20, lobes=5, samples=1024)


class TestPolarShapeSpec:
    def test_zero_amplitude_is_circle(self):
        trace = polar_trace(PolarShapeSpec(radius=15, samples=64))
        assert np.allclose(np.hypot(trace.xs, trace.ys), 15.0)

    def test_zero_lobes_is_circle_of_combined_radius(self):
        trace = polar_trace(PolarShapeSpec(radius=15, amplitude=5, lobes=0, samples=64))
        assert np.allclose(np.hypot(trace.xs, trace.ys), 20.0)

    def test_center_offset(self):
        trace = polar_trace(PolarShapeSpec(radius=10, samples=32, center=(40.0, -7.0)))
        assert trace.points.mean(axis=0) == pytest.approx((40.0, -7.0), abs=1e-9)

    def test_rose_is_simple(self):
        trace = polar_trace(ROSE)
        assert trace.n == 1024
        assert not segments_self_intersect(trace.points)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(radius=0.0),
            dict(radius=10.0, amplitude=10.0),
            dict(radius=10.0, amplitude=12.0),
            dict(radius=10.0, amplitude=-1.0),
            dict(radius=10.0, lobes=-2),
            dict(radius=10.0, samples=4),
        ],
    )
    def test_invalid_specs_rejected(self, kwargs):
        with pytest.raises(ValueError):
            PolarShapeSpec(**kwargs)


class TestPolarCurvatureOracle:
    def test_circle_is_reciprocal_radius(self):
        oracle = polar_curvature_oracle(PolarShapeSpec(radius=25, samples=128))
        assert np.allclose(oracle, 1.0 / 25.0)

    def test_rose_valley_value(self):
        # deepest concavity of the rose: (R - a - a m^2) / (R - a)^2
        oracle = polar_curvature_oracle(ROSE)
        assert oracle.min() == pytest.approx(-420.0 / 6400.0)
        assert oracle.min() == pytest.approx(-0.065625)

    def test_rose_lobe_tip_value(self):
        # at theta = 0: r = 120, r' = 0, r'' = -500
        oracle = polar_curvature_oracle(ROSE)
        assert oracle[0] == pytest.approx(74400.0 / 1728000.0)
        assert oracle[0] == pytest.approx(0.0430555555, rel=1e-8)

    def test_matches_independent_restatement(self):
        spec = PolarShapeSpec(radius=60, amplitude=13, lobes=7, samples=512)
        theta = 2 * np.pi * np.arange(512) / 512
        r, dr, ddr = spec.profile(theta)
        assert np.allclose(polar_curvature_oracle(spec), polar_kappa(r, dr, ddr))

    @pytest.mark.parametrize("lobes,samples", [(3, 192), (5, 320), (5, 1024), (8, 512)])
    def test_oracle_agreement_with_pipeline(self, lobes, samples):
        # dense sampling (>= 64 per lobe) keeps the pipeline within 1e-3
        spec = PolarShapeSpec(radius=100, amplitude=20, lobes=lobes, samples=samples)
        kappa = curvature_profile(polar_trace(spec)).kappa
        assert np.abs(kappa - polar_curvature_oracle(spec)).max() < 1e-3


class TestDippedCircle:
    def test_profile_reduces_to_circle_far_from_dips(self):
        spec = DippedCircleSpec(
            radius=50, dips=(Dip(location=0.0, depth=10, width=0.1),), samples=256
        )
        r, dr, ddr = spec.profile(np.array([np.pi]))
        assert r[0] == pytest.approx(50.0, abs=1e-6)
        assert dr[0] == pytest.approx(0.0, abs=1e-6)

    def test_oracle_agreement_with_pipeline(self):
        spec = DippedCircleSpec(
            radius=80,
            dips=(Dip(location=1.0, depth=15, width=0.25), Dip(location=4.0, depth=10, width=0.2)),
            samples=2048,
        )
        kappa = curvature_profile(polar_trace(spec)).kappa
        assert np.abs(kappa - polar_curvature_oracle(spec)).max() < 1e-3

    def test_dip_count_and_severity_discrimination(self):
        spec = DippedCircleSpec(
            radius=80,
            dips=(Dip(location=1.0, depth=15, width=0.25), Dip(location=4.0, depth=10, width=0.2)),
            samples=2048,
        )
        # dip-bottom curvature is (r - depth/width^2)/r^2 with r = R - depth:
        # -175/4225 ~ -0.0414 and -180/4900 ~ -0.0367
        # sampled minimum sits within one grid step of the dip center
        oracle = polar_curvature_oracle(spec)
        assert oracle.min() == pytest.approx(-175.0 / 4225.0, rel=1e-4)
        profile = curvature_profile(polar_trace(spec))
        assert count_indentations(profile, Severity(0.03)).count == 2
        assert count_indentations(profile, Severity(0.04)).count == 1
        assert count_indentations(profile, Severity(0.05)).count == 0

    def test_excessive_depth_rejected(self):
        with pytest.raises(ValueError):
            DippedCircleSpec(radius=20, dips=(Dip(location=0, depth=21, width=0.2),))


class TestRasterize:
    def test_circle_area(self):
        mask = rasterize(PolarShapeSpec(radius=10, samples=256, center=(31.5, 31.5)), 64, 64)
        area = int(mask.pixels.sum())
        assert abs(area - np.pi * 100) <= 0.04 * np.pi * 100

    def test_out_of_canvas(self):
        with pytest.raises(ValueError, match="fit"):
            rasterize(PolarShapeSpec(radius=10, samples=64), 1, 1)

    def test_polygon_and_analytic_routes_agree(self):
        spec = PolarShapeSpec(radius=12, amplitude=3, lobes=4, samples=4096, center=(31.5, 31.5))
        analytic = rasterize(spec, 64, 64)
        polygon = rasterize(polar_trace(spec), 64, 64)
        disagree = int((analytic.pixels ^ polygon.pixels).sum())
        assert disagree <= 3  # centers within rounding of the curve itself

    def test_trace_out_of_canvas(self):
        trace = polar_trace(PolarShapeSpec(radius=10, samples=64, center=(5.0, 5.0)))
        with pytest.raises(ValueError, match="fit"):
            rasterize(trace, 12, 12)

    def test_end_to_end_convex_zero_indentations(self):
        # pixel-noise regime: K = 16 smoothing, severity 0.02
        for radius in (20, 40):
            spec = PolarShapeSpec(radius=radius, samples=1024, center=(63.5, 63.5))
            mask = rasterize(spec, 128, 128)
            profile = curvature_profile(trace_boundary(mask, 1), lowpass=16)
            assert count_indentations(profile, Severity(0.02)).count == 0
