"""
    Ribbon graph data types
"""
from collections import namedtuple
from dataclasses import dataclass, field

HalfEdge = namedtuple("HalfEdge", ["omega", "position", "label"])

Laminate = namedtuple("Laminate", ["vertex", "faces"])


@dataclass
class RibbonGraph:
    """Marked ribbon graph of a gentle presentation.

    Ribbon vertices are indices into paths.paths. Half-edge h is
    attached to ribbon vertex halfEdges[h].omega and labeled by the
    quiver vertex it passes. sigma is the cyclic order around each
    ribbon vertex, iota pairs the two half-edges with equal label and
    marking[omega] is the half-edge at the end of the maximal path.
    """

    presentation: object
    paths: object
    halfEdges: list = field(default_factory=list)
    index: dict = field(default_factory=dict)
    iota: list = field(default_factory=list)
    sigma: list = field(default_factory=list)
    marking: dict = field(default_factory=dict)
    degenerate: bool = False

    def psi(self, half):
        """Face successor"""
        return self.iota[self.sigma[half]]

    def vertexOf(self, half):
        """Ribbon vertex of half-edge"""
        return self.halfEdges[half].omega

    def label(self, half):
        """Quiver vertex of half-edge"""
        return self.halfEdges[half].label

    def isMarked(self, half):
        """Corner between half and sigma(half) carries the marked point"""
        return self.marking[self.halfEdges[half].omega] == half

    def halfEdgeOf(self, passage):
        """Half-edge id of passage"""
        return self.index[(passage.omega, passage.position)]

    @property
    def edgeCount(self):
        """Number of edges"""
        return len(self.halfEdges) // 2


@dataclass(frozen=True)
class Face:
    """Boundary component: psi orbit of half-edges starting at its
    smallest member, marked point count and laminate endpoint count"""

    halfEdges: tuple
    marked: int
    laminateEnds: int

    @property
    def unmarkedCycle(self):
        """Length of the enclosing relation cycle of an unmarked face"""
        if self.marked == 0:
            return self.laminateEnds
        return None

    def toJson(self):
        """Face as dict"""
        data = {"b": self.marked, "l": self.laminateEnds}
        if self.unmarkedCycle is not None:
            data["unmarked_cycle_len"] = self.unmarkedCycle
        return data


@dataclass(frozen=True)
class SurfaceModel:
    """Surface invariants"""

    faces: tuple
    eulerCharacteristic: int
    genus: int
    components: int = 1
    degenerate: bool = False

    @property
    def boundaries(self):
        """Number of boundary components"""
        return len(self.faces)

    def toJson(self):
        """Surface model as dict"""
        return {
            "genus": self.genus,
            "chi": self.eulerCharacteristic,
            "boundaries": self.boundaries,
            "degenerate": self.degenerate,
            "faces": [f.toJson() for f in self.faces],
        }
