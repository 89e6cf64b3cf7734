"""
    Cone decompositions and Auslander-Reiten triangles
"""
from dataclasses import dataclass, field

from libgentlesurf.strings import parser


@dataclass(frozen=True)
class ConeDecomposition:
    """Indecomposable summands of a mapping cone, empty for the zero
    object"""

    summands: tuple = ()

    @property
    def isZero(self):
        """Cone vanishes"""
        return not self.summands

    def toJson(self):
        """Json form"""
        return {"summands": [parser.formatObject(obj) for obj in self.summands]}


@dataclass
class ARTriangle:
    """Triangle X -> sX + Xe -> Z -> X[1].

    start and end are the objects of the arcs with one endpoint
    rotated, None if that arc is trivial. maps holds the standard
    basis elements sphi, phie, spsi, psie and h.
    """

    source: object
    start: object
    end: object
    translate: object
    maps: dict = field(default_factory=dict)

    @property
    def middle(self):
        """Nonzero summands of the middle term"""
        return [obj for obj in (self.start, self.end) if obj is not None]

    def toJson(self):
        """Json form"""
        return {
            "X": parser.formatObject(self.source),
            "E": [parser.formatObject(obj) for obj in self.middle],
            "Z": parser.formatObject(self.translate),
            "maps": {
                name: None if morphism is None else morphism.toJson()
                for name, morphism in sorted(self.maps.items())
            },
        }
