"""
    Gentle validation, maximal paths, forbidden threads and path bases
"""
import logging
import itertools
from functools import lru_cache
import networkx as nx

from libgentlesurf import exceptions as baseExceptions
from libgentlesurf.algebra.types import (
    Passage,
    Path,
    MaximalPathSet,
    ForbiddenThreadSet,
)

log = logging.getLogger(__name__)


def gentleViolations(quiver, relations):
    """Return all local gentleness violations as list of strings,
    the finiteness condition is checked by relationFreeCycle()"""
    violations = []
    relations = set(tuple(r) for r in relations)
    for first, second in sorted(relations):
        if first not in quiver.arrows or second not in quiver.arrows:
            violations.append(f"relation ({first}, {second}): unknown arrow")
            continue
        if quiver.target(first) != quiver.source(second):
            violations.append(f"relation ({first}, {second}): not composable")

    for vertex in sorted(quiver.vertices):
        if len(quiver.vertices) > 1 and quiver.degree(vertex) == 0:
            violations.append(f"vertex {vertex}: isolated")
        if len(quiver.outgoing[vertex]) > 2:
            violations.append(f"vertex {vertex}: out-degree > 2")
        if len(quiver.incoming[vertex]) > 2:
            violations.append(f"vertex {vertex}: in-degree > 2")

    for name in sorted(quiver.arrows):
        after = quiver.outgoing[quiver.target(name)]
        withRel = [b for b in after if (name, b) in relations]
        withoutRel = [b for b in after if (name, b) not in relations]
        if len(withRel) > 1:
            violations.append(
                f"arrow {name}: more than one relation successor "
                f"({', '.join(sorted(withRel))})"
            )
        if len(withoutRel) > 1:
            violations.append(
                f"arrow {name}: more than one successor without relation "
                f"({', '.join(sorted(withoutRel))})"
            )
        before = quiver.incoming[quiver.source(name)]
        withRel = [a for a in before if (a, name) in relations]
        withoutRel = [a for a in before if (a, name) not in relations]
        if len(withRel) > 1:
            violations.append(
                f"arrow {name}: more than one relation predecessor "
                f"({', '.join(sorted(withRel))})"
            )
        if len(withoutRel) > 1:
            violations.append(
                f"arrow {name}: more than one predecessor without relation "
                f"({', '.join(sorted(withoutRel))})"
            )
    return violations


def successorGraph(quiver, relations, related=False):
    """Digraph on arrows, edge a->b if a.b is composable and
    (not) a relation"""
    graph = nx.DiGraph()
    graph.add_nodes_from(quiver.arrows)
    for name in quiver.arrows:
        for nxt in quiver.outgoing[quiver.target(name)]:
            if ((name, nxt) in relations) == related:
                graph.add_edge(name, nxt)
    return graph


def relationFreeCycle(quiver, relations):
    """Oriented cycle avoiding all relations or None"""
    graph = successorGraph(quiver, set(tuple(r) for r in relations))
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return None
    return [edge[0] for edge in cycle]


def validateGentle(quiver, relations):
    """Check quiver and relation set, returns empty list if gentle
    and finite dimensional"""
    violations = gentleViolations(quiver, relations)
    cycle = relationFreeCycle(quiver, relations)
    if cycle is not None:
        violations.append(f"relation-free cycle: {' '.join(cycle)}")
    return violations


def underlyingGraph(pres):
    """Undirected multigraph of the quiver"""
    graph = nx.MultiGraph()
    graph.add_nodes_from(pres.vertices)
    for arrow in pres.quiver.arrows.values():
        graph.add_edge(arrow.source, arrow.target, key=arrow.name)
    return graph


def isConnected(pres):
    """Quiver is connected"""
    return nx.is_connected(underlyingGraph(pres))


def bettiNumber(pres):
    """First Betti number of the underlying graph"""
    graph = underlyingGraph(pres)
    return (
        graph.number_of_edges()
        - graph.number_of_nodes()
        + nx.number_connected_components(graph)
    )


def _chain(start, step):
    chain = [start]
    nxt = step(start)
    while nxt is not None:
        if nxt == start:
            return chain, True
        chain.append(nxt)
        nxt = step(nxt)
    return chain, False


def isTrivialMaximal(pres, vertex):
    """Vertex carries a trivial maximal path"""
    quiver = pres.quiver
    ins = quiver.incoming[vertex]
    outs = quiver.outgoing[vertex]
    if len(ins) + len(outs) == 1:
        return True
    if len(ins) == 1 and len(outs) == 1:
        return not pres.isRelation(ins[0], outs[0])
    return False


def isTrivialThread(pres, vertex):
    """Vertex carries a trivial forbidden thread"""
    quiver = pres.quiver
    ins = quiver.incoming[vertex]
    outs = quiver.outgoing[vertex]
    if len(ins) + len(outs) == 1:
        return True
    if len(ins) == 1 and len(outs) == 1:
        return pres.isRelation(ins[0], outs[0])
    return False


def maximalPaths(pres):
    """Compute the augmented set of maximal paths together with
    the passage bookkeeping for every vertex."""
    paths = []
    for name in pres.arrows:
        if pres.predecessor(name) is not None:
            continue
        arrows, _ = _chain(name, pres.successor)
        paths.append(pres.path(arrows))

    if pres.degenerate:
        paths.append(Path(pres.vertices[0], pres.vertices[0]))
    else:
        for vertex in pres.vertices:
            if isTrivialMaximal(pres, vertex):
                paths.append(Path(vertex, vertex))

    paths.sort(key=lambda p: p.sortKey())
    result = MaximalPathSet(paths=paths)
    passages = {v: [] for v in pres.vertices}
    for omega, path in enumerate(paths):
        vertices = [path.start]
        for position, name in enumerate(path.arrows, start=1):
            result.arrowLocation[name] = (omega, position)
            vertices.append(pres.quiver.target(name))
        result.pathVertices[omega] = vertices
        for position, vertex in enumerate(vertices):
            passages[vertex].append(Passage(omega, position))

    for vertex, found in passages.items():
        if len(found) != 2 and not pres.degenerate:
            raise baseExceptions.InvariantViolation(
                f"Vertex {vertex} lies on {len(found)} maximal paths, expected 2"
            )
        result.vertexPassages[vertex] = sorted(found)

    log.debug(
        "Maximal paths: %s", ", ".join(str(p) for p in result.paths)
    )
    return result


def forbiddenThreads(pres):
    """Compute maximal relation chains, trivial threads and full
    relation cycles"""
    result = ForbiddenThreadSet()
    covered = set()
    for name in pres.arrows:
        if pres.relationPredecessor(name) is not None:
            continue
        arrows, _ = _chain(name, pres.relationSuccessor)
        covered.update(arrows)
        result.threads.append(pres.path(arrows))

    for name in pres.arrows:
        if name in covered:
            continue
        arrows, closed = _chain(name, pres.relationSuccessor)
        if not closed:
            continue
        covered.update(arrows)
        result.fullCycles.append(tuple(arrows))

    for vertex in pres.vertices:
        if isTrivialThread(pres, vertex):
            result.trivial.append(Path(vertex, vertex))

    result.threads.sort(key=lambda p: p.sortKey())
    result.trivial.sort(key=lambda p: p.sortKey())
    return result


@lru_cache(maxsize=64)
def pathBasis(pres):
    """All nonzero paths, trivial ones included"""
    basis = []
    for vertex in pres.vertices:
        basis.append(Path(vertex, vertex))
        stack = [(a,) for a in pres.quiver.outgoing[vertex]]
        while stack:
            arrows = stack.pop()
            basis.append(pres.path(arrows))
            for nxt in pres.quiver.outgoing[pres.quiver.target(arrows[-1])]:
                if not pres.isRelation(arrows[-1], nxt):
                    stack.append(arrows + (nxt,))
    basis.sort(key=lambda p: (p.start, len(p), p.arrows))
    return tuple(basis)


@lru_cache(maxsize=64)
def pathsBetween(pres):
    """Map (start, end) -> tuple of nonzero paths"""
    table = {}
    for path in pathBasis(pres):
        table.setdefault((path.start, path.end), []).append(path)
    return {key: tuple(value) for key, value in table.items()}


def pathsFromTo(pres, start, end):
    """Nonzero paths from start to end"""
    return pathsBetween(pres).get((start, end), ())


def nontrivialPathsFromTo(pres, start, end):
    """Nonzero paths of positive length from start to end"""
    return tuple(p for p in pathsFromTo(pres, start, end) if not p.isTrivial)


def isomorphic(first, second):
    """Presentations agree up to renaming arrows, vertex ids fixed"""
    if sorted(first.vertices) != sorted(second.vertices):
        return False
    if len(first.arrows) != len(second.arrows):
        return False
    if len(first.relations) != len(second.relations):
        return False

    def groups(pres):
        table = {}
        for arrow in pres.quiver.arrows.values():
            table.setdefault((arrow.source, arrow.target), []).append(arrow.name)
        return table

    left = groups(first)
    right = groups(second)
    if sorted((k, len(v)) for k, v in left.items()) != sorted(
        (k, len(v)) for k, v in right.items()
    ):
        return False

    keys = sorted(left)
    choices = [itertools.permutations(right[key]) for key in keys]
    for assignment in itertools.product(*choices):
        mapping = {}
        for key, image in zip(keys, assignment):
            mapping.update(zip(left[key], image))
        mapped = {(mapping[a], mapping[b]) for a, b in first.relations}
        if mapped == set(second.relations):
            return True
    return False


def formatPresentation(pres):
    """Render presentation in file grammar"""
    lines = []
    if pres.name:
        lines.append(f"# {pres.name}")
    for vertex in pres.vertices:
        lines.append(f"vertex {vertex}")
    for arrow in pres.quiver.arrows.values():
        lines.append(f"arrow {arrow.name} {arrow.source} {arrow.target}")
    for first, second in sorted(pres.relations):
        lines.append(f"rel {first} {second}")
    return "\n".join(lines) + "\n"


def toJson(pres):
    """Presentation as json serializable dict"""
    return {
        "vertices": list(pres.vertices),
        "arrows": [
            [a.name, a.source, a.target] for a in pres.quiver.arrows.values()
        ],
        "relations": [list(r) for r in sorted(pres.relations)],
    }
