"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class ResourceGuardError(RuntimeError):
    """A feasibility guard was exceeded (enumeration would be too large)."""


class InvariantViolation(RuntimeError):
    """Two independent computations of the same quantity disagree.

    This always indicates a bug somewhere, never bad user input, so it is
    kept distinct from DomainError.
    """
