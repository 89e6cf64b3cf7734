"""
    Complexes of projectives and chain maps
"""
from collections import namedtuple
from dataclasses import dataclass, field

# indecomposable projective P_vertex placed in degree
Summand = namedtuple("Summand", ["degree", "vertex"])


def addEntry(field_, entries, key, path, coef):
    """Add coef * path to entries[key], zero sums are dropped"""
    if coef == 0:
        return
    combination = entries.setdefault(key, {})
    total = field_.add(combination.get(path, 0), coef)
    if total == 0:
        combination.pop(path, None)
        if not combination:
            del entries[key]
    else:
        combination[path] = total


@dataclass
class ProjectiveComplex:
    """Bounded complex of indecomposable projectives.

    The differential maps (target, source) summand index pairs to
    linear combinations {Path: coefficient}. A component P_a -> P_b
    given by a path a -> b acts by right multiplication on the paths
    ending at a.
    """

    presentation: object
    field: object
    summands: list = field(default_factory=list)
    differential: dict = field(default_factory=dict)

    @property
    def degrees(self):
        """Sorted degrees carrying summands"""
        return sorted({s.degree for s in self.summands})

    def at(self, degree):
        """Summand indices in degree"""
        return [i for i, s in enumerate(self.summands) if s.degree == degree]

    def addSummand(self, degree, vertex):
        """Append summand, returns its index"""
        self.summands.append(Summand(degree, vertex))
        return len(self.summands) - 1

    def addEntry(self, target, source, path, coef=1):
        """Add coef * path to the differential component"""
        addEntry(self.field, self.differential, (target, source), path, coef)

    @property
    def isZero(self):
        """No summands"""
        return not self.summands


@dataclass
class ChainMap:
    """Degree preserving map of complexes, components keyed by
    (target index, source index)"""

    source: ProjectiveComplex
    target: ProjectiveComplex
    components: dict = field(default_factory=dict)

    def addEntry(self, target, source, path, coef):
        """Add coef * path to a component"""
        addEntry(self.source.field, self.components, (target, source), path, coef)
