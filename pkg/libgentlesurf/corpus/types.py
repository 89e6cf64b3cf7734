"""
    Corpus configuration
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class CorpusConfig:
    """Random corpus and enumeration bounds"""

    maxVertices: int = 8
    maxArrows: int = 10
    relationDensity: float = 0.5
    count: int = 200
    seed: int = 1
    maxLetters: int = 4
    gradingRange: int = 3
