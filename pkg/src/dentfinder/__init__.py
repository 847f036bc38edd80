"""Detect, count, and localize indentations on the boundary of solid 2D
binary shapes via signed curvature computed with spectral differentiation."""

from .curvature import (
    CurvatureProfile,
    RadiusOfCurvature,
    curvature_profile,
    radius_at,
    total_turning,
)
from .detect import (
    CurvatureRegion,
    IndentationReport,
    Severity,
    count_indentations,
    segment_regions,
    severity_from_radius,
)
from .errors import DecodeError, DegenerateCurveError, DegenerateHullError, TraceError
from .hull import DEFAULT_MIN_GAP_AREA, HullGapReport, convex_hull, hull_gap_count
from .raster import (
    BinaryMask,
    Component,
    decode_mask,
    encode_pbm,
    encode_pgm,
    label_components,
    load_trace_csv,
    trace_boundary,
)
from .spectral import (
    DerivativeOperator,
    SpectralCurve,
    apply_lowpass,
    derivative_operator,
    forward,
    inverse,
    reconstruct_derivative,
)
from .synth import (
    Dip,
    DippedCircleSpec,
    PolarShapeSpec,
    polar_curvature_oracle,
    polar_trace,
    rasterize,
)
from .trace import MIN_TRACE_POINTS, BoundaryTrace, resample_uniform, shoelace_area

__version__ = "0.1.0"

__all__ = [
    "BinaryMask",
    "BoundaryTrace",
    "Component",
    "CurvatureProfile",
    "CurvatureRegion",
    "DEFAULT_MIN_GAP_AREA",
    "DecodeError",
    "DegenerateCurveError",
    "DegenerateHullError",
    "DerivativeOperator",
    "Dip",
    "DippedCircleSpec",
    "HullGapReport",
    "IndentationReport",
    "MIN_TRACE_POINTS",
    "PolarShapeSpec",
    "RadiusOfCurvature",
    "Severity",
    "SpectralCurve",
    "TraceError",
    "apply_lowpass",
    "convex_hull",
    "count_indentations",
    "curvature_profile",
    "decode_mask",
    "derivative_operator",
    "encode_pbm",
    "encode_pgm",
    "forward",
    "hull_gap_count",
    "inverse",
    "label_components",
    "load_trace_csv",
    "polar_curvature_oracle",
    "polar_trace",
    "radius_at",
    "rasterize",
    "reconstruct_derivative",
    "resample_uniform",
    "segment_regions",
    "severity_from_radius",
    "shoelace_area",
    "total_turning",
    "trace_boundary",
]
