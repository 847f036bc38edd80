"""Exception types shared across the package."""


class DecodeError(ValueError):
    """An input image or CSV payload could not be decoded.

    Carries the byte offset at which decoding failed, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class TraceError(ValueError):
    """A boundary trace could not be built or is unusable."""


class DegenerateCurveError(ValueError):
    """The curve's parameterization breaks curvature evaluation."""


class DegenerateHullError(ValueError):
    """A convex hull is undefined (fewer than 3 non-collinear points)."""
