"""Exception types shared across the package."""


class SoljitterError(Exception):
    """Base class for all package errors."""


class ConfigurationError(SoljitterError, ValueError):
    """Invalid parameter or malformed experiment configuration.

    ``field_path`` names the offending config entry (e.g. ``dynamics.T``)
    when the error originates from config validation.
    """

    def __init__(self, message, field_path=None):
        self.field_path = field_path
        if field_path is not None:
            message = f"{field_path}: {message}"
        super().__init__(message)


class DomainError(SoljitterError, ValueError):
    """A localized state reaches the boundary of the periodic domain.

    Raised when soliton tails, control supports or spectral shifts leave
    the interior margin where the periodic truncation is faithful.
    """


class InstabilityError(SoljitterError, RuntimeError):
    """Non-finite values appeared during time stepping."""

    def __init__(self, t):
        self.t = t
        super().__init__(f"non-finite field detected at t={t:.6g}")


class AmbiguousPositionError(SoljitterError, ValueError):
    """Arrival time requested for a field with significant boundary mass.

    On a periodic domain the signed coordinate is only meaningful while the
    field stays away from the wrap point; we refuse rather than unwrap.
    """


class SingularCostError(SoljitterError, ValueError):
    """Amplitude path touches zero inside the integration interval."""
