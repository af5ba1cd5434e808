class GeometryError(ValueError):
    """Base class for violated geometric hypotheses."""


class NullGradient(GeometryError):
    """<grad f, grad f> is not safely positive: the normal is null or timelike."""


class ChartExit(GeometryError):
    """A differentiation stencil left the region where the curve is defined."""


class DegeneratePlane(GeometryError):
    """The 2-plane is (numerically) degenerate; sectional curvature is undefined."""


class SamplingExhausted(RuntimeError):
    """Too many consecutive rejected draws."""


class FrameConstructionFailure(RuntimeError):
    """No non-null candidate vector found while building a frame."""


class ConfigError(ValueError):
    """Invalid suite configuration."""
