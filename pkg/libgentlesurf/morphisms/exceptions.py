"""
    Exceptions
"""


class MorphismException(Exception):
    """Base morphism exception"""


class UnsupportedMorphismInput(MorphismException):
    """Object outside of the combinatorial basis description"""
