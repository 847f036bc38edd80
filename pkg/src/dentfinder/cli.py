"""Command-line front end: analyze indentations on binary shapes, run the
convex-hull baseline, and generate synthetic test shapes.

Exit codes: 0 success, 1 usage error, 2 input error, 3 degenerate data.
Reports go to stdout (or --output); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .curvature import CurvatureProfile, curvature_profile, radius_at
from .detect import Severity, count_indentations, segment_regions, severity_from_radius
from .errors import DecodeError, DegenerateCurveError, DegenerateHullError, TraceError
from .hull import DEFAULT_MIN_GAP_AREA, hull_gap_count
from .raster import (
    BinaryMask,
    decode_mask,
    encode_pbm,
    encode_pgm,
    label_components,
    load_trace_csv,
    trace_boundary,
)
from .synth import PolarShapeSpec, polar_trace, rasterize
from .trace import MIN_TRACE_POINTS, BoundaryTrace, resample_uniform

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3

SCHEMA_VERSION = 1


class UsageError(Exception):
    """Bad flags or flag combinations; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with code 2
        raise UsageError(message)


def _round9(value: float) -> float:
    """Clamp to 9 significant digits so reports are identical across runs."""
    return float(f"{float(value):.9g}")


@dataclass
class AnalysisConfig:
    """Validated knobs shared by the analyze and baseline commands."""

    severity: Severity | None
    lowpass: int | None
    resample: int | None
    min_gap_area: int
    fmt: str
    emit_curvature: bool = False
    compare: bool = False


def _config_from_args(args, need_severity: bool) -> AnalysisConfig:
    sigma = getattr(args, "sigma", None)
    rho_sigma = getattr(args, "rho_sigma", None)
    severity = None
    try:
        if sigma is not None:
            severity = Severity(sigma=sigma)
        elif rho_sigma is not None:
            severity = severity_from_radius(rho_sigma)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if need_severity and severity is None:
        raise UsageError("one of --sigma or --rho-sigma is required")
    lowpass = getattr(args, "lowpass", None)
    if lowpass is not None and lowpass < 0:
        raise UsageError(f"--lowpass must be non-negative, got {lowpass}")
    resample = getattr(args, "resample", None)
    if resample is not None and resample < MIN_TRACE_POINTS:
        raise UsageError(f"--resample must be at least {MIN_TRACE_POINTS}, got {resample}")
    min_gap_area = getattr(args, "min_gap_area", DEFAULT_MIN_GAP_AREA)
    if min_gap_area < 1:
        raise UsageError(f"--min-gap-area must be at least 1, got {min_gap_area}")
    return AnalysisConfig(
        severity=severity,
        lowpass=lowpass,
        resample=resample,
        min_gap_area=min_gap_area,
        fmt=getattr(args, "format", "json"),
        emit_curvature=getattr(args, "emit_curvature", False),
        compare=getattr(args, "compare", False),
    )


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _load_input(path) -> BinaryMask | BoundaryTrace:
    """Decode a mask (PBM/PGM/CSV grid) or a point-list CSV trace.

    PNM magic wins; otherwise a leading "x,y" header selects the point-list
    route and anything else is treated as a 0/1 grid.
    """
    data = Path(path).read_bytes()
    if data[:2] in (b"P1", b"P2", b"P4", b"P5"):
        return decode_mask(data, "pnm")
    if data.lstrip()[:8].lower().replace(b" ", b"").startswith(b"x,y"):
        return load_trace_csv(data)
    return decode_mask(data, "csv")


def _traces_from_source(source, config: AnalysisConfig) -> list[tuple[int, BoundaryTrace]]:
    if isinstance(source, BoundaryTrace):
        pairs = [(1, source)]
    else:
        pairs = []
        for component in label_components(source):
            try:
                pairs.append((component.label, trace_boundary(source, component.label)))
            except TraceError as exc:
                _warn(f"skipping component {component.label}: {exc}")
        if not pairs:
            raise TraceError("no traceable components in input")
    if config.resample is not None:
        pairs = [(label, resample_uniform(t, config.resample)) for label, t in pairs]
    return pairs


def _analyze_blob(trace: BoundaryTrace, config: AnalysisConfig):
    """Profile, per-point region signs, and the indentation report."""
    lowpass = config.lowpass
    if lowpass is not None:
        lowpass = min(lowpass, trace.n // 2)  # forgiving clamp at CLI level
    profile = curvature_profile(trace, lowpass=lowpass)
    signs = np.empty(profile.n, dtype=int)
    for region in segment_regions(profile):
        signs[region.indices(profile.n)] = region.sign
    report = count_indentations(profile, config.severity)
    return profile, signs, report


def _blob_entry(blob_id: int, trace: BoundaryTrace, profile: CurvatureProfile, signs, report, config):
    regions = []
    for region in report.regions:
        regions.append(
            {
                "start": region.start,
                "end": region.end,
                "length": region.length,
                "mean_kappa": _round9(region.mean_kappa),
                "peak_abs_kappa": _round9(region.peak_abs_kappa),
                "peak_index": region.peak_index,
                "rho_at_peak": _round9(radius_at(profile, region.peak_index).rho),
            }
        )
    entry = {
        "id": blob_id,
        "n": profile.n,
        "count": report.count,
        "regions": regions,
        "points": [[_round9(x), _round9(y)] for x, y in trace.points],
        "point_signs": [int(s) for s in signs],
    }
    if config.emit_curvature:
        entry["kappa"] = [_round9(v) for v in profile.kappa]
    return entry


def _emit(text: str, output) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    config = _config_from_args(args, need_severity=True)
    source = _load_input(args.input)
    pairs = _traces_from_source(source, config)
    blobs = []
    series_rows = []
    for blob_id, trace in pairs:
        profile, signs, report = _analyze_blob(trace, config)
        blobs.append(_blob_entry(blob_id, trace, profile, signs, report, config))
        for i in range(profile.n):
            series_rows.append(
                (blob_id, i, trace.points[i, 0], trace.points[i, 1], profile.kappa[i], signs[i])
            )
    if config.fmt == "csv":
        lines = ["blob,index,x,y,kappa,region_sign"]
        for blob_id, i, x, y, kappa, sign in series_rows:
            lines.append(f"{blob_id},{i},{x:.9g},{y:.9g},{kappa:.9g},{sign}")
        _emit("\n".join(lines) + "\n", args.output)
        return EXIT_OK
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "analyze",
        "input": str(args.input),
        "sigma": _round9(config.severity.sigma),
        "rho_sigma": _round9(config.severity.rho_sigma),
        "lowpass": config.lowpass,
        "resample": config.resample,
        "blobs": blobs,
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_baseline(args) -> int:
    config = _config_from_args(args, need_severity=args.compare)
    source = _load_input(args.input)
    if not isinstance(source, BinaryMask):
        raise DecodeError("the hull baseline needs a raster mask input, not a point list")
    components = [c for c in label_components(source) if c.area >= MIN_TRACE_POINTS]
    small = sum(1 for c in label_components(source) if c.area < MIN_TRACE_POINTS)
    if small:
        _warn(f"skipping {small} component(s) below {MIN_TRACE_POINTS} pixels")
    if not components:
        raise TraceError("no usable components in input")
    blobs = []
    for component in components:
        gap_report = hull_gap_count(source, component.label, config.min_gap_area)
        entry = {
            "id": component.label,
            "gap_count": gap_report.gap_count,
            "gap_areas": gap_report.gap_areas,
            "hull_vertices": [[_round9(x), _round9(y)] for x, y in gap_report.hull_vertices],
        }
        if config.compare:
            trace = trace_boundary(source, component.label)
            if config.resample is not None:
                trace = resample_uniform(trace, config.resample)
            _, _, report = _analyze_blob(trace, config)
            entry["indentation_count"] = report.count
        blobs.append(entry)
    if config.fmt == "csv":
        if config.compare:
            lines = ["blob,gap_count,indentation_count"]
            for e in blobs:
                lines.append(f"{e['id']},{e['gap_count']},{e['indentation_count']}")
        else:
            lines = ["blob,gap,area"]
            for e in blobs:
                for g, area in enumerate(e["gap_areas"], start=1):
                    lines.append(f"{e['id']},{g},{area}")
        _emit("\n".join(lines) + "\n", args.output)
        return EXIT_OK
    doc = {
        "schema": SCHEMA_VERSION,
        "command": "baseline",
        "input": str(args.input),
        "min_gap_area": config.min_gap_area,
        "blobs": blobs,
    }
    if config.compare:
        doc["sigma"] = _round9(config.severity.sigma)
        doc["rho_sigma"] = _round9(config.severity.rho_sigma)
        doc["lowpass"] = config.lowpass
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_synth(args) -> int:
    output = Path(args.output)
    suffix = output.suffix.lower()
    if suffix not in (".csv", ".pgm", ".pbm"):
        raise UsageError(f"cannot infer output format from suffix {suffix!r}")
    if suffix == ".csv":
        center = tuple(args.center) if args.center else (0.0, 0.0)
        spec = _synth_spec(args, center)
        trace = polar_trace(spec)
        lines = ["x,y"] + [f"{x:.9g},{y:.9g}" for x, y in trace.points]
        output.write_text("\n".join(lines) + "\n")
        return EXIT_OK
    if args.canvas:
        width, height = args.canvas
    else:
        side = 2 * int(np.ceil(args.radius + args.amplitude)) + 9
        width, height = side, side
    center = tuple(args.center) if args.center else ((width - 1) / 2.0, (height - 1) / 2.0)
    spec = _synth_spec(args, center)
    try:
        mask = rasterize(spec, width, height)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = encode_pgm(mask) if suffix == ".pgm" else encode_pbm(mask)
    output.write_bytes(payload)
    return EXIT_OK


def _synth_spec(args, center) -> PolarShapeSpec:
    try:
        return PolarShapeSpec(
            radius=args.radius,
            amplitude=args.amplitude,
            lobes=args.lobes,
            samples=args.samples,
            center=center,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _add_severity_flags(parser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--sigma", type=float, help="severity threshold, 1/pixel")
    group.add_argument(
        "--rho-sigma",
        type=float,
        dest="rho_sigma",
        help="max radius of curvature for an indentation, pixels (1/sigma)",
    )


def _add_common_flags(parser) -> None:
    parser.add_argument(
        "--lowpass",
        type=int,
        help="keep only this many boundary harmonics (clamped to n//2); default off",
    )
    parser.add_argument(
        "--resample",
        type=int,
        help="resample traces to this many uniformly spaced points first",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--output", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dentfinder", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="count and localize boundary indentations")
    analyze.add_argument("input", help="PBM/PGM mask, CSV 0/1 grid, or x,y point-list CSV")
    _add_severity_flags(analyze)
    _add_common_flags(analyze)
    analyze.add_argument(
        "--emit-curvature",
        action="store_true",
        help="include the full kappa series in JSON output",
    )
    analyze.set_defaults(func=_cmd_analyze)

    baseline = sub.add_parser("baseline", help="count convex-hull gap regions")
    baseline.add_argument("input", help="PBM/PGM mask or CSV 0/1 grid")
    _add_severity_flags(baseline)
    _add_common_flags(baseline)
    baseline.add_argument(
        "--min-gap-area",
        type=int,
        dest="min_gap_area",
        default=DEFAULT_MIN_GAP_AREA,
        help="ignore hull gaps smaller than this many pixels",
    )
    baseline.add_argument(
        "--compare",
        action="store_true",
        help="also run the curvature analysis and report both counts",
    )
    baseline.set_defaults(func=_cmd_baseline)

    synth = sub.add_parser("synth", help="generate a synthetic shape file")
    synth.add_argument("output", help="output path: .pgm/.pbm mask or .csv point list")
    synth.add_argument("--radius", type=float, required=True)
    synth.add_argument("--amplitude", type=float, default=0.0)
    synth.add_argument("--lobes", type=int, default=0)
    synth.add_argument("--samples", type=int, default=1024)
    synth.add_argument("--canvas", type=int, nargs=2, metavar=("W", "H"))
    synth.add_argument("--center", type=float, nargs=2, metavar=("CX", "CY"))
    synth.set_defaults(func=_cmd_synth)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DecodeError, TraceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DegenerateCurveError, DegenerateHullError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
