"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


class DomainError(ValueError):
    """An input lies outside an operation's domain (all-bottom vector,
    bottom column, nonpositive exponent on bottom, empty box)."""


class InstanceError(ValueError):
    """Instance data violates the schema or an instance invariant."""


class UnsupportedFormatError(ValueError):
    """The requested output format is not available for this instance."""


class ResourceError(RuntimeError):
    """A cost guard tripped (for example, the oracle lattice is too large)."""


class ContractViolationError(RuntimeError):
    """An operation was invoked outside its contract; indicates a caller or
    solver bug rather than bad user data."""
