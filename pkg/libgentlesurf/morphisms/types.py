"""
    Standard basis morphisms and word views
"""
from dataclasses import dataclass

GRAPH = "graph"
QUASI_GRAPH = "quasi-graph"
SINGLE = "singleton-single"
DOUBLE = "singleton-double"

# intersection type recorded for each basis kind
TAGS = {GRAPH: 1, QUASI_GRAPH: 2, SINGLE: 3, DOUBLE: 4}


@dataclass(frozen=True)
class StandardBasisMorphism:
    """Element of the standard basis between two objects.

    components lists (target index, source index, path, coefficient)
    entries of a chain map representative between the complexes of the
    two objects. anchor is the pair of view positions the overlap or
    connecting path starts at, pairs the complex positions matched by
    an overlap.
    """

    kind: str
    orientation: str = "forward"
    anchor: tuple = (0, 0)
    length: int = 0
    full: bool = False
    pairs: tuple = ()
    paths: tuple = ()
    shift: int = 0
    components: tuple = ()

    @property
    def tag(self):
        """Intersection type"""
        return TAGS[self.kind]

    def toJson(self):
        """Json descriptor"""
        data = {
            "kind": self.kind,
            "orientation": self.orientation,
            "anchor": {"i": self.anchor[0], "j": self.anchor[1]},
            "length": self.length,
            "shift": self.shift,
            "tag": self.tag,
        }
        if self.full:
            data["full"] = True
        if self.paths:
            data["p"] = str(self.paths[0])
        if len(self.paths) > 1:
            data["q"] = str(self.paths[1])
        return data


@dataclass(frozen=True)
class View:
    """Object read in one orientation.

    nodes maps view positions to summand indices of the complex,
    coefs holds the differential coefficient of each letter.
    """

    orientation: str
    nodes: tuple
    vertices: tuple
    grading: tuple
    letters: tuple
    coefs: tuple
    cyclic: bool

    @property
    def size(self):
        """Number of positions"""
        return len(self.nodes)

    def node(self, position):
        """Complex index at position"""
        if self.cyclic:
            return self.nodes[position % self.size]
        return self.nodes[position]

    def vertex(self, position):
        """Quiver vertex at position"""
        if self.cyclic:
            return self.vertices[position % self.size]
        return self.vertices[position]

    def degree(self, position):
        """Grading at position"""
        if self.cyclic:
            return self.grading[position % self.size]
        return self.grading[position]

    def letter(self, index):
        """Letter between positions index and index+1, None outside
        of a string"""
        if self.cyclic:
            return self.letters[index % len(self.letters)]
        if 0 <= index < len(self.letters):
            return self.letters[index]
        return None

    def coef(self, index):
        """Differential coefficient of letter index"""
        if self.cyclic:
            return self.coefs[index % len(self.coefs)]
        return self.coefs[index]

    def component(self, index):
        """(source node, target node) of the differential component of
        letter index"""
        if self.letter(index).direct:
            return self.node(index), self.node(index + 1)
        return self.node(index + 1), self.node(index)
