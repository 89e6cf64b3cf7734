"""
    Koszul dual and fundamental group rank check
"""
import logging

from libgentlesurf.algebra import algebra
from libgentlesurf.algebra import exceptions as algebraExceptions
from libgentlesurf.algebra.types import Arrow, Quiver, GentlePresentation
from libgentlesurf.ribbon import ribbon

log = logging.getLogger(__name__)


def koszulDual(pres):
    """Quadratic dual: opposite quiver, arrow names kept, with a
    relation b.a for every composable a.b of the input that is not a
    relation. Returns the dual and whether it is finite dimensional,
    which fails exactly if the input has a full relation cycle."""
    quiver = pres.quiver
    arrows = [Arrow(a.name, a.target, a.source) for a in quiver.arrows.values()]
    relations = []
    for first in pres.arrows:
        for second in quiver.outgoing[quiver.target(first)]:
            if not pres.isRelation(first, second):
                relations.append((second, first))
    dual = GentlePresentation(
        Quiver(pres.vertices, arrows), relations, name=f"{pres.name}!"
    )
    finite = algebra.relationFreeCycle(dual.quiver, dual.relations) is None
    log.debug(
        "Koszul dual with %s relations, finite: %s", len(relations), finite
    )
    return dual, finite


def pi1RankCheck(pres):
    """Return first Betti number of the quiver and the free rank
    2g + f - 1 of the surface group"""
    if not algebra.isConnected(pres):
        raise algebraExceptions.DisconnectedQuiver(
            f"Quiver of [{pres.name}] is not connected"
        )
    model = ribbon.surfaceInvariants(ribbon.buildRibbonGraph(pres))
    return algebra.bettiNumber(pres), 2 * model.genus + model.boundaries - 1
