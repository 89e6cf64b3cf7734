"""
    Homotopy string and band calculus
"""
import logging
from fractions import Fraction

from libgentlesurf.algebra.types import Passage
from libgentlesurf.strings import exceptions
from libgentlesurf.strings.types import (
    Step,
    Letter,
    Tail,
    GradedString,
    GradedBand,
    InfiniteStringSpec,
    GradedArc,
    GradedClosedCurve,
)

log = logging.getLogger(__name__)


def stepStart(pres, step):
    """Vertex a step leaves"""
    if step.forward:
        return pres.quiver.source(step.arrow)
    return pres.quiver.target(step.arrow)


def stepEnd(pres, step):
    """Vertex a step reaches"""
    if step.forward:
        return pres.quiver.target(step.arrow)
    return pres.quiver.source(step.arrow)


def cancels(first, second):
    """Second step walks back the first"""
    return first.arrow == second.arrow and first.forward != second.forward


def isLetterBoundary(pres, first, second):
    """Consecutive steps belong to different letters"""
    if first.forward != second.forward:
        return True
    if first.forward:
        return pres.isRelation(first.arrow, second.arrow)
    return pres.isRelation(second.arrow, first.arrow)


def checkWalk(pres, vertex, steps):
    """Raise InvalidString unless steps form a walk from vertex"""
    current = vertex
    for step in steps:
        if step.arrow not in pres.quiver.arrows:
            raise exceptions.InvalidString(f"Unknown arrow [{step.arrow}]")
        if stepStart(pres, step) != current:
            raise exceptions.InvalidString(
                f"Step [{'' if step.forward else '~'}{step.arrow}] does not"
                f" start at vertex [{current}]"
            )
        current = stepEnd(pres, step)
    return current


def freeReduce(steps):
    """Remove backtracking pairs"""
    stack = []
    for step in steps:
        if stack and cancels(stack[-1], step):
            stack.pop()
        else:
            stack.append(step)
    return tuple(stack)


def isReduced(steps, cyclic=False):
    """No backtracking, including the wrap around for cyclic words"""
    for first, second in zip(steps, steps[1:]):
        if cancels(first, second):
            return False
    if cyclic and len(steps) > 1 and cancels(steps[-1], steps[0]):
        return False
    return True


def _makeLetter(pres, run):
    arrows = tuple(step.arrow for step in run)
    if run[0].forward:
        return Letter(True, pres.path(arrows))
    return Letter(False, pres.path(tuple(reversed(arrows))))


def letterize(pres, steps):
    """Split a reduced walk into maximal letters"""
    letters = []
    run = []
    for step in steps:
        if run and isLetterBoundary(pres, run[-1], step):
            letters.append(_makeLetter(pres, run))
            run = []
        run.append(step)
    if run:
        letters.append(_makeLetter(pres, run))
    return tuple(letters)


def gradingFrom(base, letters, cyclic=False):
    """Grading stepping +1 over direct and -1 over inverse letters"""
    grading = [base]
    for letter in letters:
        grading.append(grading[-1] + (1 if letter.direct else -1))
    if cyclic:
        return tuple(grading[:-1])
    return tuple(grading)


def makeString(pres, vertex, steps, base=0, side=0, reduce=False):
    """Graded string from an arrow walk starting at vertex"""
    steps = tuple(steps)
    checkWalk(pres, vertex, steps)
    if reduce:
        steps = freeReduce(steps)
    elif not isReduced(steps):
        raise exceptions.InvalidString("Walk is not reduced")
    letters = letterize(pres, steps)
    return GradedString(vertex, letters, gradingFrom(base, letters), side)


def reduce(pres, letters, vertex=None, base=0):
    """Reduced graded string of a composable word of letters"""
    letters = tuple(letters)
    if vertex is None:
        if not letters:
            raise exceptions.InvalidString("Empty word needs a vertex")
        vertex = letters[0].start
    steps = []
    for letter in letters:
        steps.extend(letter.steps)
    return makeString(pres, vertex, steps, base=base, reduce=True)


def _rotateToBoundary(pres, steps):
    for offset in range(len(steps)):
        if isLetterBoundary(pres, steps[offset - 1], steps[offset]):
            return steps[offset:] + steps[:offset]
    raise exceptions.InvalidString("Cyclic word has no letter boundary")


def isPrimitive(letters):
    """Not a proper power"""
    count = len(letters)
    for period in range(1, count):
        if count % period == 0 and letters == letters[:period] * (count // period):
            return False
    return True


def makeBand(pres, steps, base=0, lam=1, m=1):
    """Graded band from a closed arrow walk, rotated so that the
    word starts at a letter boundary"""
    steps = tuple(steps)
    if not steps:
        raise exceptions.InvalidString("Band needs at least one step")
    vertex = stepStart(pres, steps[0])
    if checkWalk(pres, vertex, steps) != vertex:
        raise exceptions.InvalidString("Band walk is not closed")
    if not isReduced(steps, cyclic=True):
        raise exceptions.InvalidString("Band walk is not cyclically reduced")
    steps = _rotateToBoundary(pres, steps)
    letters = letterize(pres, steps)
    direct = sum(1 for letter in letters if letter.direct)
    if 2 * direct != len(letters):
        raise exceptions.UngradableBand(
            f"Band has {direct} direct and {len(letters) - direct} inverse letters"
        )
    if not isPrimitive(letters):
        raise exceptions.InvalidString("Band word is a proper power")
    lam = Fraction(lam)
    if lam == 0:
        raise exceptions.InvalidString("Band parameter must be nonzero")
    if m < 1:
        raise exceptions.InvalidString("Jordan block size must be positive")
    return GradedBand(letters, gradingFrom(base, letters, cyclic=True), lam, m)


def isBand(pres, steps):
    """Closed walk defines a gradable primitive band"""
    try:
        makeBand(pres, steps)
    except exceptions.StringException:
        return False
    return True


def grade(pres, obj, base):
    """Regrade string or band from the value at position 0"""
    if isinstance(obj, GradedBand):
        direct = sum(1 for letter in obj.letters if letter.direct)
        if 2 * direct != len(obj.letters):
            raise exceptions.UngradableBand("Unequal direct and inverse letters")
        return GradedBand(
            obj.letters, gradingFrom(base, obj.letters, cyclic=True), obj.lam, obj.m
        )
    if isinstance(obj, GradedString):
        return GradedString(
            obj.vertex, obj.letters, gradingFrom(base, obj.letters), obj.side
        )
    raise exceptions.StringException(f"Cannot grade object of type {type(obj)}")


def shift(obj, amount):
    """Grading decreased by amount"""
    if isinstance(obj, InfiniteStringSpec):
        return InfiniteStringSpec(obj.core.shifted(amount), obj.leftTail, obj.rightTail)
    return obj.shifted(amount)


def inverse(obj):
    """Inverse string or band, the band parameter follows the
    reversed traversal"""
    if isinstance(obj, GradedString):
        return obj.inverse()
    letters = tuple(letter.inverse() for letter in reversed(obj.letters))
    grading = (obj.grading[0],) + tuple(reversed(obj.grading[1:]))
    invariant = 1 / traversalInvariant(obj)
    return GradedBand(letters, grading, _closingParameter(invariant, letters), obj.m)


def traversalInvariant(band):
    """Product of the letter coefficients along the traversal"""
    if band.letters[-1].direct:
        return band.lam
    return 1 / band.lam


def _closingParameter(invariant, letters):
    if letters[-1].direct:
        return invariant
    return 1 / invariant


def rotations(band):
    """All rotations of band starting at letter boundaries"""
    invariant = traversalInvariant(band)
    count = len(band.letters)
    result = []
    for offset in range(count):
        letters = band.letters[offset:] + band.letters[:offset]
        grading = band.grading[offset:] + band.grading[:offset]
        result.append(
            GradedBand(letters, grading, _closingParameter(invariant, letters), band.m)
        )
    return result


def canonicalForm(obj):
    """Least representative over inversion, and rotation for bands"""
    if isinstance(obj, GradedString):
        if obj.isTrivial:
            return GradedString(obj.vertex, (), obj.grading, 0)
        return min(obj, obj.inverse(), key=lambda s: (s.key(), s.grading))
    if isinstance(obj, GradedBand):
        candidates = rotations(obj) + rotations(inverse(obj))
        return min(candidates, key=lambda b: (b.key(), b.grading, b.lam))
    if isinstance(obj, InfiniteStringSpec):
        return InfiniteStringSpec(
            obj.core,
            normalizeTail(obj.leftTail),
            normalizeTail(obj.rightTail),
        )
    raise exceptions.StringException(f"No canonical form for {type(obj)}")


def sameObject(first, second):
    """Equal up to inversion and rotation"""
    return canonicalForm(first) == canonicalForm(second)


def freePassages(paths, pres, string):
    """Passages at v0 and vr not used by the string, the passages
    an arc of the string starts and ends in"""
    if string.isTrivial:
        first, second = paths.passages(string.vertex)
        if string.side:
            return second, first
        return first, second
    steps = string.steps
    start = _usedPassage(paths, pres, steps[0], atStart=True)
    end = _usedPassage(paths, pres, steps[-1], atStart=False)
    return paths.otherPassage(start), paths.otherPassage(end)


def _usedPassage(paths, pres, step, atStart):
    omega, position = paths.arrowLocation[step.arrow]
    # the arrow occupies positions position-1 (source) and position (target)
    atSource = step.forward == atStart
    if atSource:
        return Passage(omega, position - 1)
    return Passage(omega, position)


def sideFor(paths, vertex, passage):
    """Side bit of a trivial string at vertex starting free in passage"""
    return paths.passages(vertex).index(passage)


def normalizeTail(tail):
    """Shortest pre-period and primitive period"""
    if tail is None:
        return None
    prePeriod = list(tail.prePeriod)
    period = list(tail.period)
    count = len(period)
    for length in range(1, count + 1):
        if count % length == 0 and period == period[:length] * (count // length):
            period = period[:length]
            break
    while prePeriod and prePeriod[-1] == period[-1]:
        period = [period[-1]] + period[:-1]
        prePeriod.pop()
    return Tail(tuple(prePeriod), tuple(period))


def validateTail(pres, vertex, tail):
    """Tail arrows chain outward from vertex through relations and
    the period closes up"""
    if tail is None:
        return
    if not tail.period:
        raise exceptions.InvalidString("Tail needs a nonempty period")
    arrows = list(tail.prePeriod) + list(tail.period) + [tail.period[0]]
    for name in arrows:
        if name not in pres.quiver.arrows:
            raise exceptions.InvalidString(f"Unknown arrow [{name}] in tail")
    if pres.quiver.target(arrows[0]) != vertex:
        raise exceptions.InvalidString(
            f"Tail arrow [{arrows[0]}] does not end at [{vertex}]"
        )
    for inner, outer in zip(arrows, arrows[1:]):
        if pres.quiver.target(outer) != pres.quiver.source(inner):
            raise exceptions.InvalidString(
                f"Tail arrows [{inner}] and [{outer}] do not chain"
            )
        if not pres.isRelation(outer, inner):
            raise exceptions.InvalidString(
                f"Tail arrows [{outer}] [{inner}] do not form a relation"
            )


def makeInfinite(pres, core, leftTail=None, rightTail=None):
    """Validated infinite string"""
    validateTail(pres, core.vertex, leftTail)
    validateTail(pres, core.end, rightTail)
    if leftTail is None and rightTail is None:
        raise exceptions.InvalidString("Infinite string needs a tail")
    if rightTail is not None and core.letters:
        last = core.letters[-1]
        first = rightTail.prePeriod[0] if rightTail.prePeriod else rightTail.period[0]
        if last.direct and first == last.path.last:
            raise exceptions.InvalidString("Right tail cancels the core")
        if not last.direct and not pres.isRelation(first, last.path.first):
            raise exceptions.InvalidString("Right tail needs a relation")
    if leftTail is not None and core.letters:
        initial = core.letters[0]
        first = leftTail.prePeriod[0] if leftTail.prePeriod else leftTail.period[0]
        if initial.direct and not pres.isRelation(first, initial.path.first):
            raise exceptions.InvalidString("Left tail needs a relation")
        if not initial.direct and first == initial.path.last:
            raise exceptions.InvalidString("Left tail cancels the core")
    if leftTail is not None and rightTail is not None and not core.letters:
        left = leftTail.prePeriod[0] if leftTail.prePeriod else leftTail.period[0]
        right = rightTail.prePeriod[0] if rightTail.prePeriod else rightTail.period[0]
        if left == right:
            raise exceptions.InvalidString("Tails cancel at the core vertex")
    return InfiniteStringSpec(core, normalizeTail(leftTail), normalizeTail(rightTail))


def allStrings(pres, maxLetters):
    """Canonical strings with at most maxLetters letters, graded from 0"""
    found = {}
    for vertex in pres.vertices:
        trivial = GradedString(vertex, (), (0,))
        found[trivial] = None
        stack = [(vertex, ())]
        while stack:
            current, steps = stack.pop()
            around = set(pres.quiver.outgoing[current] + pres.quiver.incoming[current])
            for name in sorted(around):
                for forward in (True, False):
                    step = Step(name, forward)
                    if stepStart(pres, step) != current:
                        continue
                    if steps and cancels(steps[-1], step):
                        continue
                    extended = steps + (step,)
                    letters = letterize(pres, extended)
                    if len(letters) > maxLetters:
                        continue
                    string = GradedString(vertex, letters, gradingFrom(0, letters))
                    found[canonicalForm(string)] = None
                    stack.append((stepEnd(pres, step), extended))
    result = sorted(found, key=lambda s: (len(s.letters), s.vertex, s.key()))
    log.debug("Enumerated %s strings with at most %s letters", len(result), maxLetters)
    return result


def objectToJson(obj):
    """Json form of strings, bands and curves"""
    if isinstance(obj, GradedString):
        return {
            "type": "string",
            "vertices": list(obj.vertices),
            "letters": [str(l) for l in obj.letters],
            "grading": list(obj.grading),
        }
    if isinstance(obj, GradedBand):
        return {
            "type": "band",
            "vertices": list(obj.vertices),
            "letters": [str(l) for l in obj.letters],
            "grading": list(obj.grading),
            "lambda": str(obj.lam),
            "m": obj.m,
        }
    if isinstance(obj, (GradedArc, GradedClosedCurve)):
        return {
            "type": "arc" if isinstance(obj, GradedArc) else "closed curve",
            "crossings": list(obj.crossings),
            "laminates": list(obj.labels),
            "grading": list(obj.grading),
        }
    raise exceptions.StringException(f"No json form for {type(obj)}")
