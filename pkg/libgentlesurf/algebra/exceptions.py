"""
    Exceptions
"""


class PresentationError(Exception):
    """Base presentation exception"""


class PresentationSyntaxError(PresentationError):
    """Line of presentation file could not be parsed"""

    def __init__(self, message, lineNo=None):
        self.lineNo = lineNo
        if lineNo is not None:
            message = f"line {lineNo}: {message}"
        super().__init__(message)


class GentleViolation(PresentationError):
    """Quiver and relations do not define a gentle algebra"""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InfiniteDimensional(PresentationError):
    """Presentation has an oriented cycle without relations"""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"relation-free cycle: [{' '.join(self.cycle)}]")


class DisconnectedQuiver(PresentationError):
    """Operation requires a connected quiver"""


class PresentationFileError(PresentationError):
    """Presentation file could not be read"""
