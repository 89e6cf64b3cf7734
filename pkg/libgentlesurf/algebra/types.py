"""
    Algebra data types
"""
from collections import namedtuple
from dataclasses import dataclass, field

Arrow = namedtuple("Arrow", ["name", "source", "target"])

# position 0 is the start vertex of the maximal path, position k
# the target of its k-th arrow
Passage = namedtuple("Passage", ["omega", "position"])


@dataclass(frozen=True)
class Path:
    """Path in the quiver, composed left to right.

    A trivial path is the idempotent of its start vertex and carries
    no arrows; start and end are equal in that case.
    """

    start: str
    end: str
    arrows: tuple = ()

    @property
    def isTrivial(self):
        """Trivial path check"""
        return len(self.arrows) == 0

    @property
    def first(self):
        """First arrow name"""
        return self.arrows[0]

    @property
    def last(self):
        """Last arrow name"""
        return self.arrows[-1]

    def __len__(self):
        return len(self.arrows)

    def sortKey(self):
        """Total order: nontrivial paths by arrow sequence before
        trivial ones by vertex"""
        if self.isTrivial:
            return (1, (self.start,))
        return (0, self.arrows)

    def isPrefixOf(self, other):
        """True if other starts with this path"""
        return (
            self.start == other.start
            and self.arrows == other.arrows[: len(self.arrows)]
        )

    def isSuffixOf(self, other):
        """True if other ends with this path"""
        if self.end != other.end:
            return False
        if self.isTrivial:
            return True
        return self.arrows == other.arrows[-len(self.arrows) :]

    def __str__(self):
        if self.isTrivial:
            return f"e@{self.start}"
        return ".".join(self.arrows)


class Quiver:
    """Finite quiver with vertex and arrow lookups"""

    def __init__(self, vertices, arrows):
        self.vertices = list(vertices)
        self.arrows = {}
        self.outgoing = {v: [] for v in self.vertices}
        self.incoming = {v: [] for v in self.vertices}
        for arrow in arrows:
            self.arrows[arrow.name] = arrow
            self.outgoing[arrow.source].append(arrow.name)
            self.incoming[arrow.target].append(arrow.name)

    def source(self, name):
        """Source vertex of arrow"""
        return self.arrows[name].source

    def target(self, name):
        """Target vertex of arrow"""
        return self.arrows[name].target

    def degree(self, vertex):
        """Number of arrow ends at vertex, loops count twice"""
        return len(self.outgoing[vertex]) + len(self.incoming[vertex])


class GentlePresentation:
    """Quiver plus quadratic monomial relations. A relation
    (a, b) states that the composite a.b vanishes."""

    def __init__(self, quiver, relations, name=""):
        self.quiver = quiver
        self.relations = frozenset(tuple(r) for r in relations)
        self.name = name

    @property
    def vertices(self):
        """Vertex list"""
        return self.quiver.vertices

    @property
    def arrows(self):
        """Arrow names in declaration order"""
        return list(self.quiver.arrows)

    @property
    def degenerate(self):
        """Single vertex without arrows"""
        return len(self.vertices) == 1 and not self.quiver.arrows

    def isRelation(self, first, second):
        """True if first.second is a relation"""
        return (first, second) in self.relations

    def composable(self, first, second):
        """Arrows meet head to tail"""
        return self.quiver.target(first) == self.quiver.source(second)

    def successor(self, name):
        """Arrow continuing name without relation"""
        for nxt in self.quiver.outgoing[self.quiver.target(name)]:
            if not self.isRelation(name, nxt):
                return nxt
        return None

    def relationSuccessor(self, name):
        """Arrow continuing name with relation"""
        for nxt in self.quiver.outgoing[self.quiver.target(name)]:
            if self.isRelation(name, nxt):
                return nxt
        return None

    def predecessor(self, name):
        """Arrow preceding name without relation"""
        for prev in self.quiver.incoming[self.quiver.source(name)]:
            if not self.isRelation(prev, name):
                return prev
        return None

    def relationPredecessor(self, name):
        """Arrow preceding name with relation"""
        for prev in self.quiver.incoming[self.quiver.source(name)]:
            if self.isRelation(prev, name):
                return prev
        return None

    def path(self, arrows, start=None):
        """Path object from arrow names, trivial at start if empty"""
        arrows = tuple(arrows)
        if not arrows:
            return Path(start, start)
        return Path(
            self.quiver.source(arrows[0]), self.quiver.target(arrows[-1]), arrows
        )

    def compose(self, first, second):
        """Composite path first.second or None if zero"""
        if first.end != second.start:
            return None
        arrows = first.arrows + second.arrows
        if first.arrows and second.arrows:
            if self.isRelation(first.last, second.first):
                return None
        return Path(first.start, second.end, arrows)


@dataclass
class MaximalPathSet:
    """Maximal paths of the presentation.

    Every arrow lies in exactly one nontrivial maximal path, and each
    vertex is passed exactly twice counting trivial ones, so the
    passages of a vertex always come in a pair.
    """

    paths: list = field(default_factory=list)
    arrowLocation: dict = field(default_factory=dict)
    vertexPassages: dict = field(default_factory=dict)
    pathVertices: dict = field(default_factory=dict)

    @property
    def nontrivial(self):
        """Index list of nontrivial maximal paths"""
        return [i for i, p in enumerate(self.paths) if not p.isTrivial]

    @property
    def trivial(self):
        """Index list of trivial maximal paths"""
        return [i for i, p in enumerate(self.paths) if p.isTrivial]

    def vertexAt(self, passage):
        """Quiver vertex of passage"""
        return self.pathVertices[passage.omega][passage.position]

    def passages(self, vertex):
        """Both passages through vertex, sorted"""
        return self.vertexPassages[vertex]

    def otherPassage(self, passage):
        """Second passage through the same vertex"""
        first, second = self.passages(self.vertexAt(passage))
        if passage == first:
            return second
        return first

    def length(self, omega):
        """Arrow count of maximal path omega"""
        return len(self.paths[omega].arrows)

    def arrowAt(self, omega, position):
        """Arrow of omega entering position, position >= 1"""
        return self.paths[omega].arrows[position - 1]


@dataclass
class ForbiddenThreadSet:
    """Maximal relation chains plus trivial forbidden threads"""

    threads: list = field(default_factory=list)
    trivial: list = field(default_factory=list)
    fullCycles: list = field(default_factory=list)
