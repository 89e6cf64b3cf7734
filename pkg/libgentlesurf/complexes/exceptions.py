"""
    Exceptions
"""


class ComplexException(Exception):
    """Base complex exception"""


class NotAChainMap(ComplexException):
    """Map does not commute with the differentials"""


class DifferentialNotSquareZero(ComplexException):
    """Differential composed with itself is nonzero"""


class FieldConfigError(ComplexException):
    """Invalid field specification"""
