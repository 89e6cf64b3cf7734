"""
    Dictionary between graded strings and graded curves
"""
import logging

from libgentlesurf.algebra.types import Passage
from libgentlesurf.ribbon import exceptions as ribbonExceptions
from libgentlesurf.strings import exceptions
from libgentlesurf.strings import strings
from libgentlesurf.strings.types import (
    Step,
    Tail,
    GradedString,
    GradedBand,
    InfiniteStringSpec,
    GradedArc,
    GradedClosedCurve,
)

log = logging.getLogger(__name__)


def placement(rg, letter):
    """Polygon and entry/exit positions of a letter inside the
    polygon of its maximal path"""
    path = letter.path
    omega, position = rg.paths.arrowLocation[path.first]
    low = position - 1
    high = low + len(path)
    if letter.direct:
        return omega, low, high
    return omega, high, low


def _tailCrossings(rg, tail):
    if tail is None:
        return None

    def crossing(name):
        omega, position = rg.paths.arrowLocation[name]
        return rg.index[(omega, position - 1)]

    return Tail(
        tuple(crossing(a) for a in tail.prePeriod),
        tuple(crossing(a) for a in tail.period),
    )


def _tailArrows(rg, wrap):
    if wrap is None:
        return None

    def arrow(half):
        edge = rg.halfEdges[half]
        return rg.paths.arrowAt(edge.omega, edge.position + 1)

    return Tail(
        tuple(arrow(h) for h in wrap.prePeriod),
        tuple(arrow(h) for h in wrap.period),
    )


def arcFromString(rg, obj):
    """Graded arc or closed curve of a string, band or infinite
    string"""
    if rg.degenerate:
        raise ribbonExceptions.DegenerateAlgebra(
            "The one vertex algebra has no laminates to cross"
        )
    if isinstance(obj, InfiniteStringSpec):
        core = arcFromString(rg, obj.core)
        return GradedArc(
            core.crossings,
            core.grading,
            core.sides,
            _tailCrossings(rg, obj.leftTail),
            _tailCrossings(rg, obj.rightTail),
            core.labels,
        )
    if isinstance(obj, GradedBand):
        crossings = []
        for letter in obj.letters:
            omega, _, exit_ = placement(rg, letter)
            crossings.append(rg.index[(omega, exit_)])
        crossings = crossings[-1:] + crossings[:-1]
        return GradedClosedCurve(
            tuple(crossings),
            obj.grading,
            tuple(letter.direct for letter in obj.letters),
            obj.lam,
            obj.m,
            tuple(obj.vertices),
        )
    if obj.isTrivial:
        passage = rg.paths.passages(obj.vertex)[obj.side]
        return GradedArc(
            (rg.halfEdgeOf(passage),), obj.grading, (), labels=(obj.vertex,)
        )
    omega, entry, _ = placement(rg, obj.letters[0])
    crossings = [rg.iota[rg.index[(omega, entry)]]]
    for letter in obj.letters:
        omega, _, exit_ = placement(rg, letter)
        crossings.append(rg.index[(omega, exit_)])
    return GradedArc(
        tuple(crossings),
        obj.grading,
        tuple(letter.direct for letter in obj.letters),
        labels=tuple(obj.vertices),
    )


def _segmentSteps(rg, entry, exit_):
    first = rg.halfEdges[entry]
    second = rg.halfEdges[exit_]
    if first.omega != second.omega:
        raise exceptions.InvalidString(
            f"Crossings {entry} and {exit_} do not share a polygon"
        )
    if first.position == second.position:
        raise exceptions.InvalidString(f"Arc backtracks at crossing {exit_}")
    arrows = rg.paths.paths[first.omega].arrows
    if first.position < second.position:
        return [Step(a, True) for a in arrows[first.position : second.position]]
    return [
        Step(a, False)
        for a in reversed(arrows[second.position : first.position])
    ]


def _checkGrading(string, grading):
    if tuple(grading) != tuple(string.grading[: len(grading)]):
        raise exceptions.InvalidString(
            f"Arc grading {list(grading)} does not follow the marked points"
        )


def stringFromArc(rg, arc):
    """Graded string or band of a graded curve"""
    pres = rg.presentation
    if isinstance(arc, GradedClosedCurve):
        count = len(arc.crossings)
        steps = []
        for i in range(1, count + 1):
            entry = rg.iota[arc.crossings[i - 1]]
            steps.extend(_segmentSteps(rg, entry, arc.crossings[i % count]))
        band = strings.makeBand(pres, steps, arc.grading[0], arc.lam, arc.m)
        if len(band.letters) != count:
            raise exceptions.InvalidString("Closed curve letters do not match crossings")
        _checkGrading(band, arc.grading)
        return band

    first = arc.crossings[0]
    vertex = rg.label(first)
    if len(arc.crossings) == 1:
        edge = rg.halfEdges[first]
        side = strings.sideFor(rg.paths, vertex, Passage(edge.omega, edge.position))
        string = GradedString(vertex, (), (arc.grading[0],), side)
    else:
        steps = []
        for previous, current in zip(arc.crossings, arc.crossings[1:]):
            steps.extend(_segmentSteps(rg, rg.iota[previous], current))
        string = strings.makeString(pres, vertex, steps, arc.grading[0])
        if len(string.letters) != len(arc.crossings) - 1:
            raise exceptions.InvalidString("Arc letters do not match crossings")
        _checkGrading(string, arc.grading)

    if arc.leftWrap is None and arc.rightWrap is None:
        return string
    return strings.makeInfinite(
        pres, string, _tailArrows(rg, arc.leftWrap), _tailArrows(rg, arc.rightWrap)
    )
