"""
    Homotopy strings, bands and curves
"""
from collections import namedtuple
from dataclasses import dataclass, field
from fractions import Fraction

Step = namedtuple("Step", ["arrow", "forward"])

# eventually periodic tail: arrow names read outward from the core,
# each arrow ending where the previous one starts
Tail = namedtuple("Tail", ["prePeriod", "period"])


class Letter(namedtuple("Letter", ["direct", "path"])):
    """Direct or inverse homotopy letter over a nonzero path"""

    __slots__ = ()

    @property
    def start(self):
        """Walk start vertex"""
        return self.path.start if self.direct else self.path.end

    @property
    def end(self):
        """Walk end vertex"""
        return self.path.end if self.direct else self.path.start

    @property
    def steps(self):
        """Arrow steps of the walk"""
        if self.direct:
            return tuple(Step(a, True) for a in self.path.arrows)
        return tuple(Step(a, False) for a in reversed(self.path.arrows))

    def inverse(self):
        """Inverse letter"""
        return Letter(not self.direct, self.path)

    def key(self):
        """Sort key"""
        return (0 if self.direct else 1, self.path.arrows)

    def __str__(self):
        if self.direct:
            return ".".join(self.path.arrows)
        return "~" + ".".join(self.path.arrows)


def letterSteps(letters):
    """Concatenated arrow steps of letters"""
    steps = []
    for letter in letters:
        steps.extend(letter.steps)
    return tuple(steps)


def letterVertices(start, letters):
    """Vertices visited by letters from start"""
    vertices = [start]
    for letter in letters:
        vertices.append(letter.end)
    return tuple(vertices)


@dataclass(frozen=True)
class GradedString:
    """Finite graded homotopy string.

    vertex is the start vertex v0, grading holds one integer per
    visited vertex. side selects which of the two passages through
    v0 is free at the start of a trivial string; it orients the arc of
    a trivial string and does not take part in comparisons.
    """

    vertex: str
    letters: tuple = ()
    grading: tuple = (0,)
    side: int = field(default=0, compare=False)

    @property
    def isTrivial(self):
        """No letters"""
        return not self.letters

    @property
    def vertices(self):
        """Vertices v0 .. vr"""
        return letterVertices(self.vertex, self.letters)

    @property
    def end(self):
        """Last vertex"""
        if self.letters:
            return self.letters[-1].end
        return self.vertex

    @property
    def base(self):
        """Grading at v0"""
        return self.grading[0]

    @property
    def steps(self):
        """Arrow level walk"""
        return letterSteps(self.letters)

    def inverse(self):
        """Reversed string, the side of a trivial string flips"""
        if self.isTrivial:
            return GradedString(self.vertex, (), self.grading, 1 - self.side)
        return GradedString(
            self.end,
            tuple(letter.inverse() for letter in reversed(self.letters)),
            tuple(reversed(self.grading)),
        )

    def shifted(self, amount):
        """Grading decreased by amount"""
        return GradedString(
            self.vertex,
            self.letters,
            tuple(g - amount for g in self.grading),
            self.side,
        )

    def key(self):
        """Sort key of the word"""
        return tuple(letter.key() for letter in self.letters)


@dataclass(frozen=True)
class GradedBand:
    """Graded homotopy band with Jordan block parameters.

    The letters are read cyclically, grading holds one entry per
    letter start. lam multiplies the closing letter.
    """

    letters: tuple
    grading: tuple
    lam: Fraction = Fraction(1)
    m: int = 1

    @property
    def vertex(self):
        """Start vertex"""
        return self.letters[0].start

    @property
    def vertices(self):
        """Vertices v0 .. v(r-1)"""
        return letterVertices(self.vertex, self.letters)[:-1]

    @property
    def base(self):
        """Grading at v0"""
        return self.grading[0]

    @property
    def steps(self):
        """Arrow level walk"""
        return letterSteps(self.letters)

    def shifted(self, amount):
        """Grading decreased by amount"""
        return GradedBand(
            self.letters,
            tuple(g - amount for g in self.grading),
            self.lam,
            self.m,
        )

    def key(self):
        """Sort key of the word"""
        return tuple(letter.key() for letter in self.letters)


@dataclass(frozen=True)
class InfiniteStringSpec:
    """Finite core with optional eventually periodic tails"""

    core: GradedString
    leftTail: Tail = None
    rightTail: Tail = None


@dataclass(frozen=True)
class GradedArc:
    """Graded arc as laminate crossing sequence.

    crossings are half-edge ids of the ribbon graph: the arc leaves
    the polygon of the half-edge and enters the polygon of its
    partner. sides records per segment whether the marked point is
    passed clockwise, which yields a direct letter.
    """

    crossings: tuple
    grading: tuple
    sides: tuple = ()
    leftWrap: tuple = None
    rightWrap: tuple = None
    labels: tuple = ()

    def shifted(self, amount):
        """Grading decreased by amount"""
        return GradedArc(
            self.crossings,
            tuple(g - amount for g in self.grading),
            self.sides,
            self.leftWrap,
            self.rightWrap,
            self.labels,
        )


@dataclass(frozen=True)
class GradedClosedCurve:
    """Graded closed curve as cyclic crossing sequence"""

    crossings: tuple
    grading: tuple
    sides: tuple = ()
    lam: Fraction = Fraction(1)
    m: int = 1
    labels: tuple = ()

    def shifted(self, amount):
        """Grading decreased by amount"""
        return GradedClosedCurve(
            self.crossings,
            tuple(g - amount for g in self.grading),
            self.sides,
            self.lam,
            self.m,
            self.labels,
        )
