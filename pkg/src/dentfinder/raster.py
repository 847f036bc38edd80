"""Binary raster ingestion: PBM/PGM/CSV decoding, connected-component
labeling, and outer-boundary tracing into ordered point sequences."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .errors import DecodeError, TraceError
from .trace import MIN_TRACE_POINTS, BoundaryTrace

_WHITESPACE = b" \t\r\n\x0b\x0c"

# Moore neighborhood in clockwise order starting west, as (dy, dx) offsets
# with the y axis pointing down rows.
_MOORE = ((0, -1), (-1, -1), (-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1))
_MOORE_INDEX = {d: i for i, d in enumerate(_MOORE)}

_EIGHT_CONNECTED = np.ones((3, 3), dtype=int)

_PNM_MAGICS = {
    "pnm": (b"P1", b"P2", b"P4", b"P5"),
    "pbm": (b"P1", b"P4"),
    "pgm": (b"P2", b"P5"),
}


@dataclass
class BinaryMask:
    """Rectangular foreground/background bitmap; the blob substrate."""

    pixels: np.ndarray  # (height, width) bool

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 2 or px.shape[0] < 1 or px.shape[1] < 1:
            raise ValueError(f"mask must be 2-D and non-empty, got shape {px.shape}")
        self.pixels = px.astype(bool)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]


@dataclass
class Component:
    """One 8-connected foreground component."""

    label: int  # 1-based, in raster-scan discovery order
    pixels: np.ndarray  # (area, 2) int, columns x, y, raster order

    @property
    def area(self) -> int:
        return self.pixels.shape[0]


class _ByteCursor:
    """Sequential reader over raw bytes that reports offsets in errors."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def fail(self, message: str, offset: int | None = None) -> None:
        raise DecodeError(message, offset=self.pos if offset is None else offset)

    def skip_space(self, comments: bool = True) -> None:
        data = self.data
        while self.pos < len(data):
            c = data[self.pos]
            if c in _WHITESPACE:
                self.pos += 1
            elif comments and c == ord("#"):
                newline = data.find(b"\n", self.pos)
                self.pos = len(data) if newline < 0 else newline + 1
            else:
                return

    def int_token(self, what: str) -> int:
        self.skip_space()
        if self.pos >= len(self.data):
            self.fail(f"unexpected end of data while reading {what}")
        start = self.pos
        while self.pos < len(self.data) and self.data[self.pos] not in _WHITESPACE + b"#":
            self.pos += 1
        token = self.data[start : self.pos]
        try:
            return int(token)
        except ValueError:
            self.fail(f"malformed {what} token {token!r}", offset=start)
        raise AssertionError("unreachable")


def decode_mask(data: bytes, fmt: str | None = None) -> BinaryMask:
    """Decode image bytes into a mask.

    Supported payloads: PBM (P1 plain / P4 raw, 1 = foreground), PGM (P2 /
    P5, any value > 0 = foreground), or a CSV grid of 0/1 cells. `fmt` is
    "pnm", "pbm", "pgm", "csv", or None to sniff from the payload magic.
    """
    if not isinstance(data, (bytes, bytearray)):
        raise TypeError("decode_mask expects bytes")
    data = bytes(data)
    tag = (fmt or "").lower()
    if tag == "":
        tag = "pnm" if data[:2] in _PNM_MAGICS["pnm"] else "csv"
    if tag == "csv":
        return _decode_csv_grid(data)
    if tag not in _PNM_MAGICS:
        raise ValueError(f"unknown format tag {fmt!r}")
    return _decode_pnm(data, _PNM_MAGICS[tag])


def _decode_pnm(data: bytes, allowed: tuple[bytes, ...]) -> BinaryMask:
    cursor = _ByteCursor(data)
    magic = data[:2]
    if magic not in allowed:
        cursor.fail(f"unsupported magic {magic!r} (expected one of {allowed})", offset=0)
    cursor.pos = 2
    width = cursor.int_token("width")
    height = cursor.int_token("height")
    if width <= 0 or height <= 0:
        cursor.fail(f"zero or negative dimensions {width}x{height}")
    if magic in (b"P2", b"P5"):
        maxval = cursor.int_token("maxval")
        if not 1 <= maxval <= 65535:
            cursor.fail(f"maxval {maxval} outside [1, 65535]")
    else:
        maxval = 1

    if magic == b"P1":
        bits = _read_plain_bits(cursor, width * height)
    elif magic == b"P2":
        bits = _read_plain_grays(cursor, width * height, maxval)
    else:
        # Raw formats: exactly one whitespace byte separates header and payload.
        if cursor.pos >= len(data) or data[cursor.pos] not in _WHITESPACE:
            cursor.fail("missing whitespace before raw payload")
        cursor.pos += 1
        payload = data[cursor.pos :]
        if magic == b"P4":
            row_bytes = (width + 7) // 8
            needed = row_bytes * height
            if len(payload) < needed:
                cursor.fail(
                    f"truncated raster: expected {needed} bytes, found {len(payload)}",
                    offset=len(data),
                )
            rows = np.frombuffer(payload[:needed], dtype=np.uint8).reshape(height, row_bytes)
            bits = np.unpackbits(rows, axis=1)[:, :width].astype(bool).ravel()
        else:  # P5
            per = 1 if maxval < 256 else 2
            needed = width * height * per
            if len(payload) < needed:
                cursor.fail(
                    f"truncated raster: expected {needed} bytes, found {len(payload)}",
                    offset=len(data),
                )
            dtype = np.uint8 if per == 1 else np.dtype(">u2")
            values = np.frombuffer(payload[:needed], dtype=dtype)
            bits = (values > 0).ravel()
    return BinaryMask(pixels=bits.reshape(height, width))


def _read_plain_bits(cursor: _ByteCursor, total: int) -> np.ndarray:
    """Plain PBM raster: 0/1 characters, whitespace between them optional."""
    bits = np.empty(total, dtype=bool)
    data = cursor.data
    count = 0
    while count < total:
        cursor.skip_space()
        if cursor.pos >= len(data):
            cursor.fail(f"truncated bit raster: expected {total} pixels, found {count}")
        c = data[cursor.pos]
        if c == ord("0"):
            bits[count] = False
        elif c == ord("1"):
            bits[count] = True
        else:
            cursor.fail(f"invalid bit character {chr(c)!r}")
        count += 1
        cursor.pos += 1
    return bits


def _read_plain_grays(cursor: _ByteCursor, total: int, maxval: int) -> np.ndarray:
    bits = np.empty(total, dtype=bool)
    for i in range(total):
        value = cursor.int_token(f"gray sample {i}")
        if not 0 <= value <= maxval:
            cursor.fail(f"gray sample {value} outside [0, {maxval}]")
        bits[i] = value > 0
    return bits


def _decode_csv_grid(data: bytes) -> BinaryMask:
    """CSV grid of 0/1 cells, one image row per line."""
    rows: list[list[bool]] = []
    offset = 0
    for raw_line in data.split(b"\n"):
        line = raw_line.strip()
        if line:
            cells = line.split(b",")
            row = []
            cell_offset = offset + len(raw_line) - len(raw_line.lstrip())
            for cell in cells:
                text = cell.strip()
                if text == b"0":
                    row.append(False)
                elif text == b"1":
                    row.append(True)
                else:
                    raise DecodeError(
                        f"grid cell {text!r} is not 0 or 1", offset=cell_offset
                    )
                cell_offset += len(cell) + 1
            if rows and len(row) != len(rows[0]):
                raise DecodeError(
                    f"ragged grid: row of {len(row)} cells after rows of {len(rows[0])}",
                    offset=offset,
                )
            rows.append(row)
        offset += len(raw_line) + 1
    if not rows:
        raise DecodeError("empty CSV grid", offset=0)
    return BinaryMask(pixels=np.array(rows, dtype=bool))


def load_trace_csv(data: bytes) -> BoundaryTrace:
    """Load a point-list CSV ("x,y" header, one point per line) as a trace.

    This bypasses the raster stages entirely; arbitrary (floating point)
    spacing is permitted.
    """
    text = data.decode("utf-8", errors="replace")
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines or lines[0].replace(" ", "").lower() != "x,y":
        raise DecodeError('point-list CSV must start with an "x,y" header line', offset=0)
    points = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 2:
            raise DecodeError(f"line {i}: expected two comma-separated values, got {line!r}")
        try:
            points.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise DecodeError(f"line {i}: non-numeric coordinate in {line!r}") from None
    if not points:
        raise DecodeError("point-list CSV contains no points")
    return BoundaryTrace.from_points(np.array(points, dtype=float))


def encode_pgm(mask: BinaryMask) -> bytes:
    """Serialize a mask as binary PGM (P5), foreground = 255."""
    header = b"P5\n%d %d\n255\n" % (mask.width, mask.height)
    return header + (mask.pixels.astype(np.uint8) * 255).tobytes()


def encode_pbm(mask: BinaryMask) -> bytes:
    """Serialize a mask as raw PBM (P4), foreground = 1."""
    header = b"P4\n%d %d\n" % (mask.width, mask.height)
    return header + np.packbits(mask.pixels, axis=1).tobytes()


def _label_array(pixels: np.ndarray) -> tuple[np.ndarray, int]:
    """8-connected labels renumbered into raster-scan discovery order."""
    raw, count = ndimage.label(pixels, structure=_EIGHT_CONNECTED)
    if count == 0:
        return raw, 0
    flat = raw.ravel()
    occupied = np.flatnonzero(flat)
    first = np.full(count + 1, flat.size, dtype=np.int64)
    np.minimum.at(first, flat[occupied], occupied)
    order = np.argsort(first[1:], kind="stable") + 1
    remap = np.zeros(count + 1, dtype=raw.dtype)
    remap[order] = np.arange(1, count + 1)
    return remap[raw], count


def label_components(mask: BinaryMask) -> list[Component]:
    """List the 8-connected foreground components of a mask.

    Ids are 1-based and assigned in raster-scan discovery order; an
    all-background mask yields an empty list.
    """
    labels, count = _label_array(mask.pixels)
    components = []
    for label in range(1, count + 1):
        ys, xs = np.nonzero(labels == label)
        components.append(
            Component(label=label, pixels=np.column_stack([xs, ys]).astype(np.int64))
        )
    return components


def trace_boundary(mask: BinaryMask, component_id: int) -> BoundaryTrace:
    """Trace the outer contour of one component into a closed trace.

    Moore-neighbor tracing with Jacob's stopping criterion, starting at the
    component's raster-order first pixel; holes are ignored and components
    touching the image border are fine. The result is normalized to
    counter-clockwise (positive shoelace area).
    """
    labels, count = _label_array(mask.pixels)
    if not 1 <= component_id <= count:
        raise ValueError(f"component {component_id} does not exist (mask has {count})")
    component = labels == component_id
    area = int(component.sum())
    if area < MIN_TRACE_POINTS:
        raise TraceError(
            f"component {component_id} has area {area}, below the minimum {MIN_TRACE_POINTS}"
        )
    chain = _moore_trace(component)
    if len(chain) < MIN_TRACE_POINTS:
        raise TraceError(
            f"trace of {len(chain)} points is shorter than the minimum {MIN_TRACE_POINTS}"
        )
    return BoundaryTrace.from_points(np.array(chain, dtype=float))


def _moore_trace(component: np.ndarray) -> list[tuple[int, int]]:
    """Walk the outer boundary of a component mask; returns (x, y) points.

    The component is padded by one background ring so border pixels need no
    special casing. Stops on re-entering the start pixel from the original
    entry direction (Jacob's criterion); a repeated interior state means the
    walk fell into a loop that never recreates the start state, which only
    happens for one-pixel-wide figures that enclose no area.
    """
    grid = np.zeros((component.shape[0] + 2, component.shape[1] + 2), dtype=bool)
    grid[1:-1, 1:-1] = component
    ys, xs = np.nonzero(grid)
    start = (int(ys[0]), int(xs[0]))  # raster-order first pixel
    start_back = (start[0], start[1] - 1)  # west neighbor is background here
    contour = [start]
    seen = {(start, start_back)}
    position, back = start, start_back
    while True:
        base = _MOORE_INDEX[(back[0] - position[0], back[1] - position[1])]
        found = None
        previous = back
        for step in range(1, 9):
            dy, dx = _MOORE[(base + step) % 8]
            probe = (position[0] + dy, position[1] + dx)
            if grid[probe]:
                found = probe
                break
            previous = probe
        if found is None:
            break  # isolated pixel; caller rejects on trace length
        if found == start and previous == start_back:
            break
        state = (found, previous)
        if state in seen:
            raise TraceError("boundary walk looped without closing; component is too thin")
        seen.add(state)
        contour.append(found)
        position, back = found, previous
    return [(x - 1, y - 1) for (y, x) in contour]
