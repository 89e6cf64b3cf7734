"""
    Standard basis of morphisms between string and band complexes:
    graph maps, quasi-graph maps, singleton single and singleton
    double maps
"""
import logging

from libgentlesurf import exceptions as baseExceptions
from libgentlesurf.algebra import algebra
from libgentlesurf.algebra.types import Path
from libgentlesurf.complexes import complexes
from libgentlesurf.complexes.types import addEntry
from libgentlesurf.morphisms import views
from libgentlesurf.morphisms.types import (
    StandardBasisMorphism,
    GRAPH,
    QUASI_GRAPH,
    SINGLE,
    DOUBLE,
)

log = logging.getLogger(__name__)

G1 = "G1"
G2 = "G2"


class Scan:
    """Complexes and views of a source/target pair"""

    def __init__(self, pres, field, source, target):
        self.pres = pres
        self.field = field
        self.source = source
        self.target = target
        self.sourceViews = views.objectViews(field, source)
        self.targetView = views.objectViews(field, target)[0]
        self.sourceComplex = complexes.objectComplex(pres, field, source)
        self.targetComplex = complexes.objectComplex(pres, field, target)

    def entries(self, components):
        """Component list as differential style dict"""
        result = {}
        for target, source, path, coef in components:
            addEntry(self.field, result, (target, source), path, coef)
        return result

    def isChain(self, entries):
        """Entries commute with both differentials"""
        return not complexes.chainDefect(self.sourceComplex, self.targetComplex, entries)

    def requireChain(self, entries, kind, anchor):
        """Raise InvariantViolation unless entries form a chain map"""
        if not self.isChain(entries):
            raise baseExceptions.InvariantViolation(
                f"{kind} map at {anchor} satisfies the basis conditions "
                "but does not commute with the differentials"
            )


def _sameLetter(first, second):
    return first is not None and first == second


def _inverse(letter):
    return None if letter is None else letter.inverse()


def overlaps(xv, yv):
    """Maximal common subwords as (i, j, length). Subwords running
    around two bands completely are left to fullOverlaps, trivial
    subwords continuing in the opposite reading of xv are dropped."""
    bound = len(xv.letters) + len(yv.letters)
    for i in range(xv.size):
        for j in range(yv.size):
            if xv.vertex(i) != yv.vertex(j):
                continue
            if _sameLetter(xv.letter(i - 1), yv.letter(j - 1)):
                continue
            length = 0
            while length <= bound and _sameLetter(
                xv.letter(i + length), yv.letter(j + length)
            ):
                length += 1
            if length > bound:
                continue
            if length == 0 and (
                _sameLetter(_inverse(xv.letter(i)), yv.letter(j - 1))
                or _sameLetter(_inverse(xv.letter(i - 1)), yv.letter(j))
            ):
                continue
            yield i, j, length


def fullOverlaps(xv, yv):
    """Rotations j under which two bands agree letter by letter"""
    if not (xv.cyclic and yv.cyclic) or len(xv.letters) != len(yv.letters):
        return
    count = len(xv.letters)
    for j in range(count):
        if xv.vertex(0) != yv.vertex(j):
            continue
        if all(xv.letter(k) == yv.letter(j + k) for k in range(count)):
            yield j


def endCondition(xLetter, yLetter, left):
    """Classify an end of a common subword.

    Returns (G2, None) if the outer letters cannot obstruct, (G1,
    arrows) if both point the same way and factor through the extra
    path arrows, (None, None) otherwise. A letter points into the
    subword when it is direct on the left or inverse on the right.
    """
    xIn = xLetter is not None and xLetter.direct == left
    yIn = yLetter is not None and yLetter.direct == left
    if (xLetter is None or not xIn) and (yLetter is None or yIn):
        return G2, None
    if xLetter is None or yLetter is None:
        return None, None
    s = xLetter.path.arrows
    t = yLetter.path.arrows
    if xIn and yIn and len(t) < len(s) and s[len(s) - len(t) :] == t:
        return G1, s[: len(s) - len(t)]
    if not xIn and not yIn and len(s) < len(t) and t[: len(s)] == s:
        return G1, t[len(s) :]
    return None, None


def crossCondition(pres, xv, yv, i, j):
    """Letters meeting head to tail across a trivial common subword
    compose to zero"""
    xLeft, yRight = xv.letter(i - 1), yv.letter(j)
    if xLeft is not None and yRight is not None and xLeft.direct and yRight.direct:
        if pres.compose(xLeft.path, yRight.path) is not None:
            return False
    xRight, yLeft = xv.letter(i), yv.letter(j - 1)
    if xRight is not None and yLeft is not None and not xRight.direct and not yLeft.direct:
        if pres.compose(xRight.path, yLeft.path) is not None:
            return False
    return True


def propagate(field, xv, yv, i, j, length, alternate=False):
    """Coefficients along a common subword making the identity
    components commute, with alternating signs for homotopies"""
    coefs = [1]
    for k in range(length):
        cx = xv.coef(i + k)
        cy = yv.coef(j + k)
        if xv.letter(i + k).direct:
            value = field.mul(coefs[-1], field.div(cy, cx))
        else:
            value = field.mul(coefs[-1], field.div(cx, cy))
        if alternate:
            value = field.neg(value)
        coefs.append(value)
    return coefs


def _identityComponents(scan, xv, yv, i, j, coefs):
    result = []
    for k, coef in enumerate(coefs):
        vertex = xv.vertex(i + k)
        result.append((yv.node(j + k), xv.node(i + k), Path(vertex, vertex), coef))
    return result


def _extraComponent(scan, xv, yv, xIndex, yIndex, outside, arrows, coef, left):
    """Component closing a square at an end satisfying G1. xIndex and
    yIndex are the outer letters, outside the offsets of the outer
    positions from them."""
    field = scan.field
    xLetter = xv.letter(xIndex)
    cx = xv.coef(xIndex)
    cy = yv.coef(yIndex)
    pointsIn = xLetter.direct == left
    if pointsIn:
        value = field.div(field.mul(cx, coef), cy)
    else:
        value = field.div(field.mul(coef, cy), cx)
    path = scan.pres.path(arrows)
    return (yv.node(yIndex + outside), xv.node(xIndex + outside), path, value)


def _pairs(xv, yv, i, j, count):
    return tuple((xv.node(i + k), yv.node(j + k)) for k in range(count))


def _graphMap(scan, xv, yv, i, j, length):
    left, leftArrows = endCondition(xv.letter(i - 1), yv.letter(j - 1), True)
    right, rightArrows = endCondition(xv.letter(i + length), yv.letter(j + length), False)
    if left is None or right is None:
        return None
    coefs = propagate(scan.field, xv, yv, i, j, length)
    components = _identityComponents(scan, xv, yv, i, j, coefs)
    if left == G1:
        components.append(
            _extraComponent(
                scan, xv, yv, i - 1, j - 1, 0, leftArrows, coefs[0], True
            )
        )
    if right == G1:
        components.append(
            _extraComponent(
                scan,
                xv,
                yv,
                i + length,
                j + length,
                1,
                rightArrows,
                coefs[-1],
                False,
            )
        )
    scan.requireChain(scan.entries(components), GRAPH, (i, j))
    return StandardBasisMorphism(
        kind=GRAPH,
        orientation=xv.orientation,
        anchor=(i, j),
        length=length,
        pairs=_pairs(xv, yv, i, j, length + 1),
        components=tuple(components),
    )


def _fullGraphMap(scan, xv, yv, j):
    """Identity of two bands agreeing letter by letter, None if their
    parameters differ"""
    count = len(xv.letters)
    coefs = propagate(scan.field, xv, yv, 0, j, count)
    if coefs[-1] != coefs[0]:
        return None
    components = _identityComponents(scan, xv, yv, 0, j, coefs[:-1])
    scan.requireChain(scan.entries(components), GRAPH, (0, j))
    return StandardBasisMorphism(
        kind=GRAPH,
        orientation=xv.orientation,
        anchor=(0, j),
        length=count,
        full=True,
        pairs=_pairs(xv, yv, 0, j, count),
        components=tuple(components),
    )


def _dedupe(morphisms, key):
    seen = set()
    result = []
    for morphism in morphisms:
        if key(morphism) in seen:
            continue
        seen.add(key(morphism))
        result.append(morphism)
    return result


def _componentKey(morphism):
    return (
        morphism.kind,
        frozenset((t, s, p) for t, s, p, _ in morphism.components),
    )


def _overlapKey(morphism):
    return (morphism.kind, frozenset(morphism.pairs), morphism.length)


def _graphMaps(scan):
    found = []
    yv = scan.targetView
    for xv in scan.sourceViews:
        for i, j, length in overlaps(xv, yv):
            if xv.degree(i) != yv.degree(j):
                continue
            morphism = _graphMap(scan, xv, yv, i, j, length)
            if morphism is not None:
                found.append(morphism)
        for j in fullOverlaps(xv, yv):
            if xv.degree(0) != yv.degree(j):
                continue
            morphism = _fullGraphMap(scan, xv, yv, j)
            if morphism is not None:
                found.append(morphism)
    return _dedupe(found, _componentKey)


def graphMaps(pres, field, source, target):
    """Graph maps source -> target"""
    return _graphMaps(Scan(pres, field, source, target))


def _leftTerms(scan, xv, yv, i, j, coef):
    """Components of d_Y h + h d_X produced by the letters left of
    a common subword"""
    field = scan.field
    terms = []
    xLetter = xv.letter(i - 1)
    if xLetter is not None and xLetter.direct:
        terms.append(
            (yv.node(j), xv.node(i - 1), xLetter.path, field.mul(xv.coef(i - 1), coef))
        )
    yLetter = yv.letter(j - 1)
    if yLetter is not None and not yLetter.direct:
        terms.append(
            (yv.node(j - 1), xv.node(i), yLetter.path, field.mul(coef, yv.coef(j - 1)))
        )
    return terms


def _quasiGraphMap(scan, xv, yv, i, j, length):
    """Quasi-graph map of a common subword of source and target[-1]
    failing both end conditions, represented by its left part"""
    left, _ = endCondition(xv.letter(i - 1), yv.letter(j - 1), True)
    right, _ = endCondition(xv.letter(i + length), yv.letter(j + length), False)
    if left is not None or right is not None:
        return None
    if length == 0 and not crossCondition(scan.pres, xv, yv, i, j):
        log.debug("Trivial subword at %s/%s blocked across", i, j)
        return None
    coefs = propagate(scan.field, xv, yv, i, j, length, alternate=True)
    components = tuple(_leftTerms(scan, xv, yv, i, j, coefs[0]))
    if not components:
        raise baseExceptions.InvariantViolation(
            f"Quasi-graph subword at {(i, j)} has no left part"
        )
    scan.requireChain(scan.entries(components), QUASI_GRAPH, (i, j))
    return StandardBasisMorphism(
        kind=QUASI_GRAPH,
        orientation=xv.orientation,
        anchor=(i, j),
        length=length,
        pairs=_pairs(xv, yv, i, j, length + 1),
        shift=1,
        components=components,
    )


def _connectingMap(scan, xv, yv, j):
    """Quasi-graph map of a band onto its own shift, supported on the
    first letter"""
    count = len(xv.letters)
    coefs = propagate(scan.field, xv, yv, 0, j, count, alternate=True)
    if coefs[-1] != coefs[0]:
        return None
    letter = xv.letter(0)
    xSource, _ = xv.component(0)
    _, yTarget = yv.component(j)
    components = ((yTarget, xSource, letter.path, 1),)
    scan.requireChain(scan.entries(components), QUASI_GRAPH, (0, j))
    return StandardBasisMorphism(
        kind=QUASI_GRAPH,
        orientation=xv.orientation,
        anchor=(0, j),
        length=count,
        full=True,
        pairs=_pairs(xv, yv, 0, j, count),
        shift=1,
        components=components,
    )


def _quasiGraphMaps(scan):
    found = []
    yv = scan.targetView
    for xv in scan.sourceViews:
        for i, j, length in overlaps(xv, yv):
            if xv.degree(i) != yv.degree(j) + 1:
                continue
            morphism = _quasiGraphMap(scan, xv, yv, i, j, length)
            if morphism is not None:
                found.append(morphism)
        for j in fullOverlaps(xv, yv):
            if xv.degree(0) != yv.degree(j) + 1:
                continue
            morphism = _connectingMap(scan, xv, yv, j)
            if morphism is not None:
                found.append(morphism)
    # both readings of a trivial subword give the same class
    return _dedupe(found, _overlapKey)


def quasiGraphMaps(pres, field, source, target):
    """Quasi-graph maps source -> target, from common subwords of
    source and target[-1]"""
    return _quasiGraphMaps(Scan(pres, field, source, target))


def adjacency(cx):
    """Per summand the differential components arriving and leaving
    as (other index, path, coefficient)"""
    incoming = {i: [] for i in range(len(cx.summands))}
    outgoing = {i: [] for i in range(len(cx.summands))}
    for (target, source), combination in sorted(
        cx.differential.items(), key=lambda item: item[0]
    ):
        for path, coef in sorted(combination.items(), key=lambda item: item[0].sortKey()):
            outgoing[source].append((target, path, coef))
            incoming[target].append((source, path, coef))
    return incoming, outgoing


def _killedFrom(pres, letters, path):
    """Every letter followed by path vanishes"""
    return all(pres.compose(s, path) is None for _, s, _ in letters)


def _killedInto(pres, path, letters):
    """Path followed by every letter vanishes"""
    return all(pres.compose(path, t) is None for _, t, _ in letters)


def _singleMaps(scan):
    pres = scan.pres
    xIn, xOut = adjacency(scan.sourceComplex)
    yIn, yOut = adjacency(scan.targetComplex)
    found = []
    for a, xSummand in enumerate(scan.sourceComplex.summands):
        for b, ySummand in enumerate(scan.targetComplex.summands):
            if xSummand.degree != ySummand.degree:
                continue
            for path in algebra.nontrivialPathsFromTo(pres, xSummand.vertex, ySummand.vertex):
                if not _killedFrom(pres, xIn[a], path):
                    continue
                if not _killedInto(pres, path, yOut[b]):
                    continue
                # maps factoring through a letter belong to quasi-graph classes
                if any(u.isPrefixOf(path) for _, u, _ in xOut[a]):
                    continue
                if any(v.isSuffixOf(path) for _, v, _ in yIn[b]):
                    continue
                components = ((b, a, path, 1),)
                scan.requireChain(scan.entries(components), SINGLE, (a, b))
                found.append(
                    StandardBasisMorphism(
                        kind=SINGLE,
                        anchor=(a, b),
                        paths=(path,),
                        components=components,
                    )
                )
    return found


def singletonSingleMaps(pres, field, source, target):
    """Singleton single maps source -> target"""
    return _singleMaps(Scan(pres, field, source, target))


def _doubleMaps(scan):
    pres = scan.pres
    field = scan.field
    xIn, xOut = adjacency(scan.sourceComplex)
    yIn, yOut = adjacency(scan.targetComplex)
    found = []
    for a, xLetters in xOut.items():
        for a2, letter, cx in xLetters:
            for b, yLetters in yOut.items():
                if scan.sourceComplex.summands[a].degree != scan.targetComplex.summands[b].degree:
                    continue
                for b2, other, cy in yLetters:
                    for cut in range(1, len(letter)):
                        middle = letter.arrows[cut:]
                        if len(other) <= len(middle) or other.arrows[: len(middle)] != middle:
                            continue
                        p = pres.path(letter.arrows[:cut])
                        q = pres.path(other.arrows[len(middle) :])
                        if not _killedFrom(pres, xIn[a], p):
                            continue
                        if not _killedInto(
                            pres, p, [t for t in yOut[b] if t[1] != other]
                        ):
                            continue
                        if not _killedFrom(pres, [s for s in xIn[a2] if s[1] != letter], q):
                            continue
                        if not _killedInto(pres, q, yOut[b2]):
                            continue
                        components = (
                            (b, a, p, 1),
                            (b2, a2, q, field.div(cy, cx)),
                        )
                        scan.requireChain(scan.entries(components), DOUBLE, (a, b))
                        found.append(
                            StandardBasisMorphism(
                                kind=DOUBLE,
                                anchor=(a, b),
                                length=1,
                                pairs=((a, b), (a2, b2)),
                                paths=(p, q),
                                components=components,
                            )
                        )
    return found


def singletonDoubleMaps(pres, field, source, target):
    """Singleton double maps source -> target"""
    return _doubleMaps(Scan(pres, field, source, target))


def standardBasis(pres, field, source, target):
    """Graph, quasi-graph, singleton single and singleton double maps
    forming a basis of the morphisms source -> target"""
    scan = Scan(pres, field, source, target)
    basis = _graphMaps(scan) + _quasiGraphMaps(scan) + _singleMaps(scan) + _doubleMaps(scan)
    log.debug(
        "Standard basis: %s",
        ", ".join(f"{m.kind}@{m.anchor}" for m in basis) or "empty",
    )
    return basis
