"""
    Exceptions
"""


class RibbonException(Exception):
    """Base ribbon graph exception"""


class DegenerateAlgebra(RibbonException):
    """Operation undefined for the one vertex algebra without arrows"""
