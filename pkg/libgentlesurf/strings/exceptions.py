"""
    Exceptions
"""


class StringException(Exception):
    """Base string exception"""


class StringSyntaxError(StringException):
    """Object literal could not be parsed"""


class InvalidString(StringException):
    """Word is not a homotopy string or band"""


class UngradableBand(StringException):
    """Band with unequal number of direct and inverse letters"""
