"""
    Exceptions
"""


class GentleSurfException(Exception):
    """Base exception"""


class UnsupportedObject(GentleSurfException):
    """Object is outside of what the combinatorial engines
    handle: Jordan blocks of size > 1, infinite strings
    or bands where only strings are accepted."""


class InvariantViolation(GentleSurfException):
    """A structural check failed, for example d² != 0 or
    a realized map does not commute with the differentials"""
