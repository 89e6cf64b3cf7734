"""
    Chain map representatives of standard basis morphisms
"""
import logging

from libgentlesurf import exceptions as baseExceptions
from libgentlesurf.complexes import complexes
from libgentlesurf.complexes.types import ChainMap

log = logging.getLogger(__name__)


def realize(morphism, source, target):
    """Chain map between the complexes source and target carrying the
    components of morphism, verified to commute with the
    differentials"""
    chainMap = ChainMap(source, target)
    for targetIndex, sourceIndex, path, coef in morphism.components:
        chainMap.addEntry(targetIndex, sourceIndex, path, coef)
    if not complexes.isChainMap(chainMap):
        raise baseExceptions.InvariantViolation(
            f"Realized {morphism.kind} map at {morphism.anchor} is no chain map"
        )
    return chainMap


def realizeAll(basis, source, target):
    """Realize every element of a basis"""
    return [realize(morphism, source, target) for morphism in basis]
