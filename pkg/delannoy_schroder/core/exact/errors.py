"""Exceptions raised by the exact arithmetic layers."""


class DelannoyError(Exception):
    """Base class for every error raised by this package."""

    pass


class NotPrimeError(DelannoyError):
    """Raised when an argument that must be an odd prime is not one."""

    pass


class NotInvertibleError(DelannoyError):
    """Raised when a division or modular inverse does not exist at the requested modulus."""

    pass


class PrecisionExhaustedError(DelannoyError):
    """Raised when a tracked residue no longer carries the precision a caller asked for."""

    pass


class NonDivisibleError(DelannoyError):
    """Raised when an exact division leaves a remainder."""

    pass


class ConsistencyError(DelannoyError):
    """Raised when two independent computations of the same quantity disagree."""

    pass
