"""
    Exceptions
"""


class ConeException(Exception):
    """Base cone exception"""


class ConeUnsupported(ConeException):
    """Cone does not reduce to string and band summands"""


class RotationException(ConeException):
    """Rotated endpoint does not give a finite string"""
