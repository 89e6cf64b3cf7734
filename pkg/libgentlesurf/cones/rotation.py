"""
    Rotation of arc endpoints, inverse Auslander-Reiten translate and
    Auslander-Reiten triangles
"""
import logging

from libgentlesurf import exceptions as baseExceptions
from libgentlesurf.algebra.types import Passage
from libgentlesurf.cones import exceptions
from libgentlesurf.cones.types import ARTriangle
from libgentlesurf.complexes import complexes
from libgentlesurf.complexes.types import ChainMap
from libgentlesurf.morphisms import morphisms
from libgentlesurf.morphisms import realize
from libgentlesurf.strings import exceptions as stringExceptions
from libgentlesurf.strings import parser
from libgentlesurf.strings import strings
from libgentlesurf.strings.types import Step, GradedString, GradedBand

log = logging.getLogger(__name__)


def relationChain(pres, arrow):
    """arrow followed by its relation successors"""
    chain = [arrow]
    following = pres.relationSuccessor(arrow)
    while following is not None:
        if following in chain:
            raise exceptions.RotationException(
                f"Arrow [{arrow}] runs into a full cycle of relations"
            )
        chain.append(following)
        following = pres.relationSuccessor(following)
    return chain


def _forward(arrows):
    return [Step(a, True) for a in arrows]


def _otherOutgoing(pres, vertex, arrow):
    return [a for a in pres.quiver.outgoing[vertex] if a != arrow]


def _string(pres, vertex, steps, base, case):
    try:
        result = strings.makeString(pres, vertex, steps, base)
    except stringExceptions.StringException as e:
        raise exceptions.RotationException(
            f"Rotation case {case} gives no string: [{e}]"
        ) from e
    log.debug("Rotation case %s: %s letters", case, len(result.letters))
    return result


def _trivial(paths, vertex, passage, base, case):
    log.debug("Rotation case %s: trivial string at %s", case, vertex)
    return GradedString(vertex, (), (base,), strings.sideFor(paths, vertex, passage))


def _checkString(obj):
    if not isinstance(obj, GradedString):
        raise baseExceptions.UnsupportedObject(
            f"Rotation needs a finite string, got {type(obj).__name__}"
        )


def rotateEnd(pres, paths, string):
    """String of the arc whose end moves clockwise to the next marked
    point, None if that arc is trivial. The grading at the start is
    kept."""
    _checkString(string)
    start, end = strings.freePassages(paths, pres, string)
    letters = string.letters
    base = string.base
    steps = list(string.steps)

    omega = paths.paths[end.omega]
    # the end walks back to the start of its maximal path and leaves
    # along the other arrow there
    if not omega.isTrivial and end.position >= 1:
        steps += [Step(a, False) for a in reversed(omega.arrows[: end.position])]
        other = _otherOutgoing(pres, omega.start, omega.first)
        if other:
            steps += _forward(relationChain(pres, other[0]))
        return _string(pres, string.vertex, steps, base, 1)

    # the trailing run of single arrows walked backwards is dropped
    kept = len(letters)
    while kept and not letters[kept - 1].direct and len(letters[kept - 1].path) == 1:
        kept -= 1

    if kept:
        last = letters[kept - 1]
        head = []
        for letter in letters[: kept - 1]:
            head.extend(letter.steps)
        if last.direct:
            location, position = paths.arrowLocation[last.path.last]
            if position < paths.length(location):
                alpha = paths.arrowAt(location, position + 1)
                steps = head + list(last.steps) + _forward(relationChain(pres, alpha))
                return _string(pres, string.vertex, steps, base, 2)
            if head:
                return _string(pres, string.vertex, head, base, 3)
            return _trivial(paths, string.vertex, start, base, 3)

        arrows = last.path.arrows
        steps = head + [Step(a, False) for a in reversed(arrows[1:])]
        other = _otherOutgoing(pres, pres.quiver.target(arrows[0]), arrows[1])
        if other:
            steps += _forward(relationChain(pres, other[0]))
        return _string(pres, string.vertex, steps, base, 4)

    omega = paths.paths[start.omega]
    if omega.isTrivial or start.position >= len(omega.arrows):
        log.debug("Rotated end gives a trivial arc")
        return None
    alpha = omega.arrows[start.position]
    vertex = pres.quiver.target(alpha)
    chain = relationChain(pres, alpha)[1:]
    if chain:
        return _string(pres, vertex, _forward(chain), base, 5)
    return _trivial(paths, vertex, Passage(start.omega, start.position + 1), base, 5)


def rotateStart(pres, paths, string):
    """String of the arc whose start moves clockwise to the next
    marked point, None if that arc is trivial"""
    _checkString(string)
    rotated = rotateEnd(pres, paths, string.inverse())
    if rotated is None:
        return None
    return rotated.inverse()


def inverseArTranslate(pres, paths, obj):
    """Inverse Auslander-Reiten translate. Bands are fixed, a string
    moves both arc endpoints. Over the one vertex algebra the
    translate is the shift."""
    if isinstance(obj, GradedBand):
        return obj
    _checkString(obj)
    if pres.degenerate:
        return obj.shifted(1)
    end = rotateEnd(pres, paths, obj)
    if end is not None:
        both = rotateStart(pres, paths, end)
        if both is not None:
            return both
    start = rotateStart(pres, paths, obj)
    if start is not None:
        both = rotateEnd(pres, paths, start)
        if both is not None:
            return both
    raise baseExceptions.InvariantViolation(
        f"Neither endpoint order rotates {parser.formatObject(obj)} to a string"
    )


def translatePower(pres, paths, obj, power):
    """Inverse translate applied power times"""
    for _ in range(power):
        obj = inverseArTranslate(pres, paths, obj)
    return obj


def _locate(pres, field, source, target):
    if source is None or target is None:
        return None
    basis = morphisms.standardBasis(pres, field, source, target)
    if not basis:
        return None
    return min(basis, key=lambda m: m.tag)


def arTriangle(pres, field, paths, string):
    """Auslander-Reiten triangle starting in a string object"""
    if isinstance(string, GradedBand):
        raise baseExceptions.UnsupportedObject(
            "Triangles are built for strings, bands are fixed by the translate"
        )
    _checkString(string)
    start = rotateStart(pres, paths, string)
    end = rotateEnd(pres, paths, string)
    translate = inverseArTranslate(pres, paths, string)
    maps = {
        "sphi": _locate(pres, field, string, start),
        "phie": _locate(pres, field, string, end),
        "spsi": _locate(pres, field, start, translate),
        "psie": _locate(pres, field, end, translate),
        "h": _locate(pres, field, translate, string.shifted(1)),
    }
    return ARTriangle(string, start, end, translate, maps)


def _chainMap(pres, field, morphism, source, target):
    return realize.realize(
        morphism,
        complexes.objectComplex(pres, field, source),
        complexes.objectComplex(pres, field, target),
    )


def checkTriangle(pres, field, triangle):
    """Euler additivity and vanishing composites of a triangle"""
    def euler(obj):
        return complexes.eulerCharacteristic(complexes.objectComplex(pres, field, obj))

    middle = sum(euler(obj) for obj in triangle.middle)
    result = {"euler": middle == euler(triangle.source) + euler(triangle.translate)}

    maps = triangle.maps
    pairs = [
        ("sphi", "spsi", triangle.start),
        ("phie", "psie", triangle.end),
    ]
    composites = []
    complete = True
    for first, second, obj in pairs:
        if obj is None:
            continue
        if maps[first] is None or maps[second] is None:
            complete = False
            continue
        f = _chainMap(pres, field, maps[first], triangle.source, obj)
        g = _chainMap(pres, field, maps[second], obj, triangle.translate)
        composites.append(complexes.compose(f, g))

    null = [complexes.isNullHomotopic(c) for c in composites]
    if len(composites) == 2 and not any(null):
        first = composites[0]
        rebased = [first, ChainMap(first.source, first.target, composites[1].components)]
        vanishing = complexes.rankModuloHomotopy(first.source, first.target, rebased) == 1
    else:
        vanishing = all(null)
    result["composite"] = complete and vanishing

    connecting = maps["h"] is not None
    if connecting:
        shifted = triangle.source.shifted(1)
        for name, obj in (("spsi", triangle.start), ("psie", triangle.end)):
            if obj is None or maps[name] is None:
                continue
            g = _chainMap(pres, field, maps[name], obj, triangle.translate)
            h = _chainMap(pres, field, maps["h"], triangle.translate, shifted)
            composite = complexes.compose(g, h)
            if not complexes.isNullHomotopic(composite):
                connecting = False
    result["connecting"] = connecting
    return result
