"""
    Oriented graded intersections of curves through the standard
    basis
"""
import logging

from libgentlesurf.morphisms import exceptions
from libgentlesurf.morphisms import morphisms
from libgentlesurf.strings import curves
from libgentlesurf.strings.types import GradedArc, GradedClosedCurve

log = logging.getLogger(__name__)


def _object(rg, curve):
    if isinstance(curve, GradedArc) and (
        curve.leftWrap is not None or curve.rightWrap is not None
    ):
        raise exceptions.UnsupportedMorphismInput(
            "Intersections with infinite arcs are not enumerated"
        )
    return curves.stringFromArc(rg, curve)


def gradedIntersections(rg, field, first, second):
    """Count and tagged list of oriented graded intersections from
    first to second. For a closed curve met by itself the identity,
    or the connecting map onto its shift, has no intersection."""
    source = _object(rg, first)
    target = _object(rg, second)
    basis = morphisms.standardBasis(rg.presentation, field, source, target)
    closed = isinstance(first, GradedClosedCurve) and isinstance(second, GradedClosedCurve)
    kept = []
    for morphism in basis:
        if closed and morphism.full:
            log.debug("Dropping %s map of the closed curve onto itself", morphism.kind)
            continue
        kept.append(morphism)
    return {
        "count": len(kept),
        "intersections": [m.toJson() for m in kept],
    }
