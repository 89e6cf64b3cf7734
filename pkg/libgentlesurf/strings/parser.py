"""
    Object literal parser

        a1 ~a2 @0                      string, ~ walks an arrow backwards
        e@3 @1                         trivial string at vertex 3
        band(a1 ~a2)@0 lambda=2 m=1    band with Jordan data
"""
import re
from fractions import Fraction

from libgentlesurf.strings import exceptions
from libgentlesurf.strings import strings
from libgentlesurf.strings.types import Step, GradedString, GradedBand

BAND = re.compile(r"^band\((?P<body>[^)]*)\)\s*@\s*(?P<base>-?\d+)(?P<rest>.*)$")
GRADED = re.compile(r"^(?P<body>.*?)\s*@\s*(?P<base>-?\d+)$")
TRIVIAL = re.compile(r"^e@(?P<vertex>[^@\s]+)$")


def _steps(pres, body):
    steps = []
    for token in body.split():
        forward = not token.startswith("~")
        name = token.lstrip("~")
        if name not in pres.quiver.arrows:
            raise exceptions.StringSyntaxError(f"Unknown arrow [{name}] in [{body}]")
        steps.append(Step(name, forward))
    return steps


def _bandOptions(rest):
    lam = Fraction(1)
    size = 1
    for token in rest.split():
        key, _, value = token.partition("=")
        try:
            if key == "lambda":
                lam = Fraction(value)
            elif key == "m":
                size = int(value)
            else:
                raise exceptions.StringSyntaxError(f"Unknown band option [{token}]")
        except (ValueError, ZeroDivisionError) as e:
            raise exceptions.StringSyntaxError(
                f"Invalid band option [{token}]: [{e}]"
            ) from e
    return lam, size


def parseObject(pres, text):
    """Parse string or band literal into a graded object"""
    text = text.strip()
    if not text:
        raise exceptions.StringSyntaxError("Empty object literal")

    match = BAND.match(text)
    if match:
        steps = _steps(pres, match.group("body"))
        lam, size = _bandOptions(match.group("rest"))
        return strings.makeBand(pres, steps, int(match.group("base")), lam, size)
    if text.startswith("band"):
        raise exceptions.StringSyntaxError(f"Malformed band literal [{text}]")

    base = 0
    body = text
    if not TRIVIAL.match(text):
        match = GRADED.match(text)
        if match:
            body = match.group("body")
            base = int(match.group("base"))

    trivial = TRIVIAL.match(body.strip())
    if trivial:
        vertex = trivial.group("vertex")
        if vertex not in pres.quiver.outgoing:
            raise exceptions.StringSyntaxError(f"Unknown vertex [{vertex}]")
        return GradedString(vertex, (), (base,))

    steps = _steps(pres, body)
    if not steps:
        raise exceptions.StringSyntaxError(f"No letters in [{text}]")
    vertex = strings.stepStart(pres, steps[0])
    return strings.makeString(pres, vertex, steps, base)


def formatObject(obj):
    """Literal of a graded string or band"""
    tokens = " ".join(
        ("" if step.forward else "~") + step.arrow for step in obj.steps
    )
    if isinstance(obj, GradedBand):
        return f"band({tokens})@{obj.base} lambda={obj.lam} m={obj.m}"
    if isinstance(obj, GradedString) and obj.isTrivial:
        return f"e@{obj.vertex} @{obj.base}"
    return f"{tokens} @{obj.base}"
