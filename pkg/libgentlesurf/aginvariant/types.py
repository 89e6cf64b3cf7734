"""
    AG invariant type
"""
from collections import Counter
from dataclasses import dataclass


@dataclass(frozen=True)
class AGInvariant:
    """Multiset of (k, l) pairs, kept sorted"""

    pairs: tuple = ()

    @classmethod
    def fromPairs(cls, pairs):
        """Invariant from an unordered pair list"""
        return cls(tuple(sorted(tuple(p) for p in pairs)))

    def counts(self):
        """The invariant as function (k, l) -> multiplicity"""
        return dict(Counter(self.pairs))

    def toJson(self):
        """Sorted list of [k, l] pairs"""
        return [list(p) for p in self.pairs]
