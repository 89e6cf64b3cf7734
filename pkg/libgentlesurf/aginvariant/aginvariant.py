"""
    AG invariant from maximal paths and forbidden threads, and from
    the boundary of the ribbon surface
"""
import logging

from libgentlesurf import exceptions as baseExceptions
from libgentlesurf.algebra import algebra
from libgentlesurf.algebra.types import Path
from libgentlesurf.aginvariant.types import AGInvariant
from libgentlesurf.ribbon import ribbon

log = logging.getLogger(__name__)


def _thread(pres, threads, maximal):
    """Forbidden thread ending where maximal ends, leaving through the
    other arrow"""
    vertex = maximal.end
    for thread in threads:
        if thread.end != vertex:
            continue
        if not maximal.isTrivial and thread.last == maximal.last:
            continue
        return thread
    return Path(vertex, vertex)


def _maximal(paths, thread):
    """Maximal path starting where thread starts, through the other
    arrow, or the trivial one"""
    vertex = thread.start
    for path in paths.paths:
        if path.isTrivial or path.start != vertex:
            continue
        if not thread.isTrivial and path.first == thread.first:
            continue
        return path
    trivial = Path(vertex, vertex)
    if trivial not in paths.paths:
        raise baseExceptions.InvariantViolation(
            f"No maximal path continues the thread {thread}"
        )
    return trivial


def agPaths(pres):
    """AG invariant by alternating maximal paths and forbidden
    threads, plus (0, n) for every full cycle of relations"""
    paths = algebra.maximalPaths(pres)
    threads = algebra.forbiddenThreads(pres)
    nontrivial = [t for t in threads.threads if not t.isTrivial]

    pairs = []
    visited = set()
    for seed in sorted(paths.paths, key=lambda p: p.sortKey()):
        if seed in visited:
            continue
        current = seed
        k = 0
        l = 0
        while True:
            visited.add(current)
            thread = _thread(pres, nontrivial, current)
            l += len(thread)
            k += 1
            current = _maximal(paths, thread)
            if current == seed:
                break
            if current in visited or k > len(paths.paths):
                raise baseExceptions.InvariantViolation(
                    f"Path/thread alternation from {seed} does not close"
                )
        log.debug("AG orbit from %s: (%s, %s)", seed, k, l)
        pairs.append((k, l))

    for cycle in threads.fullCycles:
        pairs.append((0, len(cycle)))
    return AGInvariant.fromPairs(pairs)


def agSurface(rg, faceList=None):
    """AG invariant as (marked points, laminate ends - marked points)
    per boundary component"""
    if faceList is None:
        faceList = ribbon.faces(rg)
    return AGInvariant.fromPairs(
        (face.marked, face.laminateEnds - face.marked) for face in faceList
    )


def polygonCheck(rg, faceList=None):
    """Every marked boundary has l - b equal to the polygon side
    counts minus two, summed"""
    if rg.degenerate:
        return True
    if faceList is None:
        faceList = ribbon.faces(rg)
    for face, sides in zip(faceList, ribbon.polygons(rg, faceList)):
        if face.marked == 0:
            continue
        if sum(k - 2 for k in sides) != face.laminateEnds - face.marked:
            log.error("Face %s: polygons %s do not match l - b", face.halfEdges, sides)
            return False
    return True


def sameAg(first, second):
    """Equal AG invariants. Derived equivalent algebras agree, the
    converse fails in general."""
    return agPaths(first) == agPaths(second)
