"""Exception types raised by :mod:`thermal_vacuum`."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigurationError(ValueError):
    """A workspace or grid was requested with unusable settings."""


class TruncationError(RuntimeError):
    """The Fock-space truncation is too small for the requested temperature.

    ``suggested_dim`` holds a dimension that would pass the tail-mass gate.
    """

    def __init__(self, message, suggested_dim=None):
        super().__init__(message)
        self.suggested_dim = suggested_dim


class PrecisionError(RuntimeError):
    """A position grid does not resolve the state it is asked to integrate."""


class ConsistencyError(RuntimeError):
    """Two numerically equivalent routes disagree beyond their tolerance."""
