"""
Exception hierarchy for annulus-opt.

Input problems subclass ValueError so callers that only know about
ValueError keep working.
"""


class AnnulusOptError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(AnnulusOptError, ValueError):
    """Invalid ring radii, lambda, counts or grid specification."""


class ConfigError(ParameterError):
    """An AngleConfig or runtime configuration violates its invariants."""


class GeometryError(AnnulusOptError, ValueError):
    """Malformed or degenerate convex body."""


class RegimeError(AnnulusOptError, ValueError):
    """Lambda outside the band an operation is defined on, or an empty root bracket."""
