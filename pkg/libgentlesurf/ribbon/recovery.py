"""
    Recover the algebra from the ribbon graph
"""
import logging

from libgentlesurf.algebra.types import Arrow, Quiver, GentlePresentation
from libgentlesurf.ribbon import exceptions

log = logging.getLogger(__name__)


def recoverAlgebra(rg):
    """Read arrows and relations off the unmarked corners.

    An unmarked corner (h, sigma(h)) gives an arrow from label(h) to
    label(sigma(h)). Two unmarked corners at h and psi(h) give a
    relation. Arrows are named after the half-edge of their corner.
    """
    pres = rg.presentation
    if rg.degenerate:
        return GentlePresentation(Quiver(pres.vertices, []), [], name=pres.name)

    arrows = {}
    for half in range(len(rg.halfEdges)):
        if rg.isMarked(half):
            continue
        arrows[half] = Arrow(f"c{half}", rg.label(half), rg.label(rg.sigma[half]))

    relations = []
    for half, arrow in arrows.items():
        following = rg.psi(half)
        if following in arrows:
            relations.append((arrow.name, arrows[following].name))

    log.debug(
        "Recovered %s arrows and %s relations", len(arrows), len(relations)
    )
    if len(arrows) != len(pres.arrows):
        raise exceptions.RibbonException(
            f"Recovered {len(arrows)} arrows, expected {len(pres.arrows)}"
        )
    return GentlePresentation(
        Quiver(pres.vertices, arrows.values()), relations, name=pres.name
    )
