"""Shared exception types.

Guard limits are configuration, not hard constants: exceeding one raises
GuardExceeded (CLI exit code 2) and is never silently truncated. Malformed
input raises DomainError (CLI exit code 1).
"""


class SalientError(Exception):
    """Base class for all package errors."""


class DomainError(SalientError, ValueError):
    """Invalid input value: bad word, malformed gamma word, and so on."""


class GuardExceeded(SalientError):
    """A configurable size or limit guard was exceeded."""


class OrbitOverflowError(GuardExceeded):
    """A breadth-first orbit closure grew past its member cap."""


class InternalConsistencyError(SalientError):
    """A cross-checkable identity failed inside the library itself."""
