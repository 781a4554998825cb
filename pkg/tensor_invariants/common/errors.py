class InvariantsError(Exception):
    """Base class for domain errors. `code` is the name reported in CLI JSON."""
    code = "InvariantsError"


class DimensionMismatchError(InvariantsError):
    """Raised when a tensor and a metric (or two tensors) disagree on dimension."""
    code = "DimensionMismatch"


class PreconditionError(InvariantsError):
    """Raised when an operation's precondition does not hold."""
    code = "PreconditionViolation"


class NonFiniteResultError(InvariantsError):
    """Raised when a result overflows to inf or NaN and cannot be written as JSON."""
    code = "NonFiniteResult"


class ConfigError(Exception):
    """Raised for unusable configuration values (environment or flags)."""
    code = "ConfigError"


def check_dims(*dims: int) -> int:
    """Return the common dimension, raising DimensionMismatchError if they differ."""
    first = dims[0]
    if any(d != first for d in dims[1:]):
        raise DimensionMismatchError(f"Dimensions do not match: {list(dims)}")
    return first
