"""
    Ribbon graph construction, faces and surface invariants
"""
import logging
import networkx as nx

from libgentlesurf.algebra import algebra
from libgentlesurf.ribbon import exceptions
from libgentlesurf.ribbon.types import (
    HalfEdge,
    RibbonGraph,
    Face,
    SurfaceModel,
    Laminate,
)

log = logging.getLogger(__name__)


def buildRibbonGraph(pres, paths=None):
    """Build marked ribbon graph, one half-edge per passage of a
    maximal path through a quiver vertex. The one vertex algebra
    yields a graph without half-edges flagged as degenerate."""
    if paths is None:
        paths = algebra.maximalPaths(pres)
    rg = RibbonGraph(presentation=pres, paths=paths)
    if pres.degenerate:
        rg.degenerate = True
        log.debug("Degenerate algebra, ribbon graph without half-edges")
        return rg

    for omega, vertices in sorted(paths.pathVertices.items()):
        start = len(rg.halfEdges)
        for position, label in enumerate(vertices):
            rg.index[(omega, position)] = len(rg.halfEdges)
            rg.halfEdges.append(HalfEdge(omega, position, label))
        count = len(vertices)
        for position in range(count):
            rg.sigma.append(start + (position + 1) % count)
        rg.marking[omega] = start + count - 1

    rg.iota = [None] * len(rg.halfEdges)
    for vertex in pres.vertices:
        first, second = (rg.halfEdgeOf(p) for p in paths.passages(vertex))
        rg.iota[first] = second
        rg.iota[second] = first
    return rg


def faces(rg):
    """Orbits of the face successor iota(sigma(h))"""
    if rg.degenerate:
        ends = sum(len(laminate.faces) for laminate in lamination(rg))
        return [Face(halfEdges=(), marked=len(rg.paths.paths), laminateEnds=ends)]
    seen = set()
    result = []
    for start in range(len(rg.halfEdges)):
        if start in seen:
            continue
        orbit = []
        half = start
        while half not in seen:
            seen.add(half)
            orbit.append(half)
            half = rg.psi(half)
        marked = sum(1 for h in orbit if rg.isMarked(h))
        result.append(
            Face(halfEdges=tuple(orbit), marked=marked, laminateEnds=len(orbit))
        )
    log.debug(
        "Faces: %s", ", ".join(f"(b={f.marked}, l={f.laminateEnds})" for f in result)
    )
    return result


def faceIndex(faceList):
    """Map half-edge -> index of its face"""
    table = {}
    for number, face in enumerate(faceList):
        for half in face.halfEdges:
            table[half] = number
    return table


def ribbonComponents(rg):
    """Connected components of the ribbon graph"""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(len(rg.paths.paths)))
    for half, other in enumerate(rg.iota):
        if half < other:
            graph.add_edge(rg.vertexOf(half), rg.vertexOf(other))
    return nx.number_connected_components(graph)


def surfaceInvariants(rg, faceList=None):
    """Compute genus, euler characteristic and boundary data"""
    if rg.degenerate:
        return SurfaceModel(
            faces=tuple(faces(rg)),
            eulerCharacteristic=1,
            genus=0,
            components=1,
            degenerate=True,
        )
    if faceList is None:
        faceList = faces(rg)
    vertices = len(rg.paths.paths)
    edges = rg.edgeCount
    chi = vertices - edges + len(faceList)
    components = ribbonComponents(rg)
    genus = (2 * components - chi) // 2
    model = SurfaceModel(
        faces=tuple(faceList),
        eulerCharacteristic=chi,
        genus=genus,
        components=components,
    )
    log.debug(
        "Surface: v=%s e=%s f=%s chi=%s genus=%s", vertices, edges, len(faceList), chi, genus
    )
    return model


def lamination(rg, faceList=None):
    """One laminate per quiver vertex with the faces at its ends"""
    if rg.degenerate:
        # the disc has one marked point, its laminate meets the boundary once
        return [Laminate(rg.presentation.vertices[0], (0,))]
    if faceList is None:
        faceList = faces(rg)
    where = faceIndex(faceList)
    result = []
    for vertex in rg.presentation.vertices:
        first, second = (rg.halfEdgeOf(p) for p in rg.paths.passages(vertex))
        result.append(Laminate(vertex, tuple(sorted((where[first], where[second])))))
    return result


def polygons(rg, faceList=None):
    """Split every marked face at its marked corners. Returns per
    face the list of polygon side counts."""
    if rg.degenerate:
        raise exceptions.DegenerateAlgebra("No polygons for the one vertex algebra")
    if faceList is None:
        faceList = faces(rg)
    result = []
    for face in faceList:
        orbit = list(face.halfEdges)
        if face.marked == 0:
            result.append([])
            continue
        last = max(i for i, h in enumerate(orbit) if rg.isMarked(h))
        orbit = orbit[last + 1 :] + orbit[: last + 1]
        sides = []
        length = 0
        for half in orbit:
            length += 1
            if rg.isMarked(half):
                sides.append(length + 1)
                length = 0
        result.append(sides)
    return result


def toDot(rg):
    """Ribbon graph as DOT multigraph, sigma order as node attribute"""
    lines = ["graph ribbon {"]
    for omega, path in enumerate(rg.paths.paths):
        order = " ".join(
            str(rg.halfEdges[h].label)
            for h in range(len(rg.halfEdges))
            if rg.vertexOf(h) == omega
        )
        lines.append(f'    w{omega} [label="{path}" sigma="{order}"];')
    for half, other in enumerate(rg.iota):
        if half < other:
            lines.append(
                f"    w{rg.vertexOf(half)} -- w{rg.vertexOf(other)}"
                f' [label="{rg.label(half)}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def laminationToDot(rg, faceList=None):
    """Lamination dual as DOT multigraph: faces as nodes, laminates
    as edges"""
    if faceList is None:
        faceList = faces(rg)
    lines = ["graph lamination {"]
    for number, face in enumerate(faceList):
        lines.append(
            f'    B{number} [label="b={face.marked} l={face.laminateEnds}"];'
        )
    for laminate in lamination(rg, faceList):
        if len(laminate.faces) == 1:
            lines.append(f"    L{laminate.vertex} [shape=point];")
            lines.append(f'    B{laminate.faces[0]} -- L{laminate.vertex} [label="{laminate.vertex}"];')
            continue
        first, second = laminate.faces
        lines.append(f'    B{first} -- B{second} [label="{laminate.vertex}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
