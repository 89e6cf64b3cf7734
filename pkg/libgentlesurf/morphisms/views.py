"""
    Orientation views of strings and bands
"""
from libgentlesurf import exceptions as baseExceptions
from libgentlesurf.morphisms import exceptions
from libgentlesurf.morphisms.types import View
from libgentlesurf.strings.types import GradedString, GradedBand


def checkSupported(obj):
    """Raise unless obj is a finite string or a band with m = 1"""
    if isinstance(obj, GradedString):
        return
    if isinstance(obj, GradedBand):
        if obj.m != 1:
            raise exceptions.UnsupportedMorphismInput(
                f"Band with Jordan block size {obj.m}, only m=1 is enumerated"
            )
        return
    raise baseExceptions.UnsupportedObject(
        f"Morphism enumeration needs strings or bands, got {type(obj).__name__}"
    )


def stringViews(field, string):
    """Forward and reversed view of a string"""
    count = len(string.letters)
    forward = View(
        "forward",
        tuple(range(count + 1)),
        tuple(string.vertices),
        tuple(string.grading),
        tuple(string.letters),
        tuple(1 for _ in string.letters),
        False,
    )
    backward = View(
        "reversed",
        tuple(reversed(range(count + 1))),
        tuple(reversed(string.vertices)),
        tuple(reversed(string.grading)),
        tuple(letter.inverse() for letter in reversed(string.letters)),
        forward.coefs,
        False,
    )
    return [forward, backward]


def bandViews(field, band):
    """Forward and reversed view of a band, the closing letter
    carries the parameter"""
    count = len(band.letters)
    coefs = tuple(1 for _ in range(count - 1)) + (field.element(band.lam),)
    forward = View(
        "forward",
        tuple(range(count)),
        tuple(band.vertices),
        tuple(band.grading),
        tuple(band.letters),
        coefs,
        True,
    )
    # reversed position i sits on node -i, its letter is the inverse
    # of the original letter -i-1
    nodes = tuple((-i) % count for i in range(count))
    backward = View(
        "reversed",
        nodes,
        tuple(band.vertices[n] for n in nodes),
        tuple(band.grading[n] for n in nodes),
        tuple(band.letters[(-i - 1) % count].inverse() for i in range(count)),
        tuple(coefs[(-i - 1) % count] for i in range(count)),
        True,
    )
    return [forward, backward]


def objectViews(field, obj):
    """Both orientation views of a supported object"""
    checkSupported(obj)
    if isinstance(obj, GradedBand):
        return bandViews(field, obj)
    return stringViews(field, obj)
