"""
    Mapping cones of standard basis morphisms

    The cone is computed by word surgery on its letter graph: summands
    of the cone complex are nodes, differential entries are letters.
    Each kind of basis element dictates its moves. Graph maps contract
    the identified summands of their common subword, quasi-graph maps
    merge the two copies of their common subword by a change of basis
    so that source and target words swap their tails, singleton single
    and double maps slide the letter their path is nested in. Letters
    left nested at a node after these moves are slid apart. The graph
    left over is a disjoint union of chains and cycles, read back as
    strings and bands.
"""
import logging
import networkx as nx

from libgentlesurf import exceptions as baseExceptions
from libgentlesurf.cones import exceptions
from libgentlesurf.cones.types import ConeDecomposition
from libgentlesurf.complexes import complexes
from libgentlesurf.complexes.types import addEntry
from libgentlesurf.morphisms import morphisms
from libgentlesurf.morphisms import realize
from libgentlesurf.morphisms import views
from libgentlesurf.morphisms.types import GRAPH, QUASI_GRAPH, SINGLE, DOUBLE
from libgentlesurf.strings import curves
from libgentlesurf.strings import exceptions as stringExceptions
from libgentlesurf.strings import strings
from libgentlesurf.strings.types import Step, GradedString, GradedBand

log = logging.getLogger(__name__)


class ConeGraph:
    """Summands of a cone complex with the differential entries as
    letters. Target summands keep their index, source summands are
    shifted by offset."""

    def __init__(self, chainMap):
        cx = complexes.coneComplex(chainMap)
        self.pres = cx.presentation
        self.field = cx.field
        self.offset = len(chainMap.target.summands)
        self.summands = dict(enumerate(cx.summands))
        self.entries = {key: dict(c) for key, c in cx.differential.items()}
        self.moves = 0

    def sourceNode(self, index):
        """Node of a source summand"""
        return self.offset + index

    def add(self, target, source, path, coef):
        """Add coef * path to an entry, None paths vanish"""
        if path is None:
            return
        addEntry(self.field, self.entries, (target, source), path, coef)

    def outgoing(self, node):
        """Entries leaving node as (target, path, coefficient)"""
        result = []
        for (target, source), combination in sorted(self.entries.items()):
            if source != node:
                continue
            for path, coef in sorted(combination.items(), key=lambda i: i[0].sortKey()):
                result.append((target, path, coef))
        return result

    def incoming(self, node):
        """Entries arriving at node as (source, path, coefficient)"""
        result = []
        for (target, source), combination in sorted(self.entries.items()):
            if target != node:
                continue
            for path, coef in sorted(combination.items(), key=lambda i: i[0].sortKey()):
                result.append((source, path, coef))
        return result

    def _remove(self, node):
        del self.summands[node]
        for key in [k for k in self.entries if node in k]:
            del self.entries[key]

    def contract(self, a, b):
        """Split off the contractible pair joined by an isomorphism
        a -> b"""
        combination = self.entries.get((b, a), {})
        if len(combination) != 1 or not next(iter(combination)).isTrivial:
            raise exceptions.ConeUnsupported(
                f"Component {a} -> {b} is not a single isomorphism"
            )
        field = self.field
        pivot = next(iter(combination.values()))
        inbound = [e for e in self.incoming(b) if e[0] != a]
        outbound = [e for e in self.outgoing(a) if e[0] != b]
        self._remove(a)
        self._remove(b)
        factor = field.neg(field.div(1, pivot))
        for u, first, cu in inbound:
            for z, second, cz in outbound:
                self.add(
                    z, u, self.pres.compose(first, second),
                    field.mul(factor, field.mul(cu, cz)),
                )
        self.moves += 1
        log.debug("Contracted %s -> %s", a, b)
        return {u for u, _, _ in inbound} | {z for z, _, _ in outbound}

    def combine(self, b, c, rho):
        """Replace summand b by b + rho * c, both at the same vertex
        and degree"""
        field = self.field
        inbound = self.incoming(b)
        outbound = self.outgoing(c)
        for u, path, cu in inbound:
            self.add(c, u, path, field.neg(field.mul(rho, cu)))
        for z, path, cz in outbound:
            self.add(z, b, path, field.mul(rho, cz))
        self.moves += 1
        log.debug("Combined %s with %s", b, c)
        return {u for u, _, _ in inbound} | {z for z, _, _ in outbound} | {b, c}

    def slideOut(self, a, b, c, shorter, longer):
        """Clear the entry a -> c whose path extends the path of the
        entry a -> b"""
        field = self.field
        cab = self.entries[(b, a)][shorter]
        cac = self.entries[(c, a)][longer]
        rest = self.pres.path(longer.arrows[len(shorter) :])
        rho = field.div(cac, cab)
        inbound = self.incoming(b)
        outbound = self.outgoing(c)
        for u, path, cu in inbound:
            self.add(c, u, self.pres.compose(path, rest), field.neg(field.mul(rho, cu)))
        for z, path, cz in outbound:
            self.add(z, b, self.pres.compose(rest, path), field.mul(rho, cz))
        self.moves += 1
        log.debug("Slid %s -> %s out along %s", a, c, rest)
        return {u for u, _, _ in inbound} | {z for z, _, _ in outbound} | {a, b, c}

    def slideIn(self, a, b, c, shorter, longer):
        """Clear the entry c -> b whose path extends the path of the
        entry a -> b to the left"""
        field = self.field
        cab = self.entries[(b, a)][shorter]
        ccb = self.entries[(b, c)][longer]
        rest = self.pres.path(longer.arrows[: len(longer) - len(shorter)])
        kappa = field.div(ccb, cab)
        outbound = self.outgoing(a)
        inbound = self.incoming(c)
        for z, path, caz in outbound:
            self.add(z, c, self.pres.compose(rest, path), field.neg(field.mul(kappa, caz)))
        for w, path, cwc in inbound:
            self.add(a, w, self.pres.compose(path, rest), field.mul(kappa, cwc))
        self.moves += 1
        log.debug("Slid %s -> %s in along %s", c, b, rest)
        return {z for z, _, _ in outbound} | {w for w, _, _ in inbound} | {a, b, c}

    def _nestedOut(self, node):
        out = self.outgoing(node)
        for b, shorter, _ in out:
            for c, longer, _ in out:
                if c != b and len(shorter) < len(longer) and shorter.isPrefixOf(longer):
                    return b, c, shorter, longer
        return None

    def _nestedIn(self, node):
        inc = self.incoming(node)
        for a, shorter, _ in inc:
            for c, longer, _ in inc:
                if c != a and len(shorter) < len(longer) and shorter.isSuffixOf(longer):
                    return a, c, shorter, longer
        return None

    def untangle(self, nodes, limit=None):
        """Slide nested letters apart, starting at nodes and following
        every node a move touches"""
        if limit is None:
            limit = 100 + 20 * len(self.summands) ** 2
        pending = sorted(n for n in nodes if n in self.summands)
        count = 0
        while pending:
            node = pending.pop(0)
            if node not in self.summands:
                continue
            nested = self._nestedOut(node)
            if nested:
                touched = self.slideOut(node, *nested)
            else:
                nested = self._nestedIn(node)
                if not nested:
                    continue
                a, c, shorter, longer = nested
                touched = self.slideIn(a, node, c, shorter, longer)
            count += 1
            if count > limit:
                raise exceptions.ConeUnsupported(
                    f"Cone surgery did not settle after {limit} moves"
                )
            pending = sorted(set(pending) | {n for n in touched if n in self.summands})

    def graph(self):
        """Undirected multigraph of the remaining letters"""
        result = nx.MultiGraph()
        result.add_nodes_from(sorted(self.summands))
        for (target, source), combination in sorted(self.entries.items()):
            if len(combination) > 1:
                raise baseExceptions.InvariantViolation(
                    f"Cone entry {source} -> {target} is not a single letter"
                )
            for path, coef in combination.items():
                result.add_edge(source, target, path=path, coef=coef, source=source)
        return result

    def _walk(self, graph, start, cyclic):
        """Arrow steps, visited nodes and traversal coefficients of a
        chain or cycle from start"""
        field = self.field
        used = set()
        steps = []
        nodes = [start]
        invariant = 1
        lastDirect = True
        current = start
        while True:
            edges = [
                (u, v, key, data)
                for u, v, key, data in graph.edges(current, keys=True, data=True)
                if (min(u, v), max(u, v), key) not in used
            ]
            if not edges:
                break
            u, v, key, data = min(edges, key=lambda e: (e[1], e[2]))
            used.add((min(u, v), max(u, v), key))
            other = v if u == current else u
            path = data["path"]
            lastDirect = data["source"] == current
            if lastDirect:
                steps.extend(Step(a, True) for a in path.arrows)
                invariant = field.mul(invariant, data["coef"])
            else:
                steps.extend(Step(a, False) for a in reversed(path.arrows))
                invariant = field.div(invariant, data["coef"])
            current = other
            if cyclic and current == start:
                break
            nodes.append(current)
        return steps, nodes, invariant, lastDirect

    def _string(self, graph, nodes):
        if len(nodes) == 1:
            node = next(iter(nodes))
            summand = self.summands[node]
            return GradedString(summand.vertex, (), (summand.degree,))
        ends = sorted(n for n in nodes if graph.degree(n) == 1)
        start = ends[0]
        steps, visited, _, _ = self._walk(graph, start, cyclic=False)
        summand = self.summands[start]
        try:
            string = strings.makeString(self.pres, summand.vertex, steps, summand.degree)
        except stringExceptions.StringException as e:
            raise exceptions.ConeUnsupported(f"Cone chain is no string: [{e}]") from e
        degrees = tuple(self.summands[n].degree for n in visited)
        if len(string.letters) != len(visited) - 1 or string.grading != degrees:
            raise exceptions.ConeUnsupported("Cone chain does not follow letters")
        return string

    def _band(self, graph, nodes):
        start = min(nodes)
        steps, visited, invariant, lastDirect = self._walk(graph, start, cyclic=True)
        lam = invariant if lastDirect else self.field.div(1, invariant)
        summand = self.summands[start]
        try:
            band = strings.makeBand(self.pres, steps, summand.degree, lam)
        except stringExceptions.StringException as e:
            raise exceptions.ConeUnsupported(f"Cone cycle is no band: [{e}]") from e
        degrees = tuple(self.summands[n].degree for n in visited)
        if (
            len(band.letters) != len(visited)
            or band.vertex != summand.vertex
            or band.grading != degrees
        ):
            raise exceptions.ConeUnsupported("Cone cycle does not follow letters")
        return band

    def objects(self):
        """Strings and bands of the letter graph, every node must meet
        at most two letters"""
        graph = self.graph()
        result = []
        for nodes in sorted(nx.connected_components(graph), key=min):
            sub = graph.subgraph(nodes)
            if max((d for _, d in sub.degree()), default=0) > 2:
                raise baseExceptions.InvariantViolation(
                    f"Summand {min(nodes)} of the cone meets more than two letters"
                )
            edges = sub.number_of_edges()
            if edges == len(nodes) - 1:
                result.append(self._string(sub, nodes))
            elif edges == len(nodes):
                result.append(self._band(sub, nodes))
            else:
                raise exceptions.ConeUnsupported("Cone graph is not a chain or cycle")
        return result


def _sorted(objects):
    canonical = [strings.canonicalForm(obj) for obj in objects]
    return tuple(
        sorted(
            canonical,
            key=lambda o: (isinstance(o, GradedBand), o.key(), o.grading, o.vertex),
        )
    )


def _sourceView(field, morphism, source):
    for view in views.objectViews(field, source):
        if view.orientation == morphism.orientation:
            return view
    raise baseExceptions.InvariantViolation(
        f"No {morphism.orientation} view of the morphism source"
    )


def _graphSurgery(graph, morphism):
    """Contract the identified summands of the common subword"""
    touched = set()
    for xNode, yNode in morphism.pairs:
        touched |= graph.contract(graph.sourceNode(xNode), yNode)
    return touched


def _quasiSurgery(graph, pres, field, morphism, source, target):
    """Merge the two copies of the common subword of source and
    target[-1]. The copy in the target absorbs the copy in the source
    scaled by the homotopy coefficients, which swaps the tails of the
    two words."""
    xv = _sourceView(field, morphism, source)
    yv = views.objectViews(field, target)[0]
    i, j = morphism.anchor
    coefs = morphisms.propagate(field, xv, yv, i, j, morphism.length, alternate=True)
    touched = set()
    for (xNode, yNode), coef in zip(morphism.pairs, coefs):
        rho = field.neg(field.div(1, coef))
        touched |= graph.combine(yNode, graph.sourceNode(xNode), rho)
    return touched


def _componentSurgery(graph, morphism):
    """Nodes met by the components of a singleton map"""
    touched = set()
    for yNode, xNode, _, _ in morphism.components:
        touched |= {yNode, graph.sourceNode(xNode)}
    return touched


def mappingCone(pres, field, morphism, source, target):
    """Decomposition of the cone of a standard basis morphism
    source -> target"""
    views.checkSupported(source)
    views.checkSupported(target)
    if morphism.full and morphism.kind == GRAPH:
        log.debug("Cone of the identity vanishes")
        return ConeDecomposition()
    if morphism.full and morphism.kind == QUASI_GRAPH:
        band = GradedBand(target.letters, target.grading, target.lam, 2)
        log.debug("Cone of the connecting map is the band with m=2")
        return ConeDecomposition(_sorted([band]))
    chainMap = realize.realize(
        morphism,
        complexes.objectComplex(pres, field, source),
        complexes.objectComplex(pres, field, target),
    )
    graph = ConeGraph(chainMap)
    if morphism.kind == GRAPH:
        touched = _graphSurgery(graph, morphism)
    elif morphism.kind == QUASI_GRAPH:
        touched = _quasiSurgery(graph, pres, field, morphism, source, target)
    elif morphism.kind in (SINGLE, DOUBLE):
        touched = _componentSurgery(graph, morphism)
    else:
        raise exceptions.ConeException(f"Unknown morphism kind {morphism.kind}")
    graph.untangle(touched)
    summands = _sorted(graph.objects())
    log.debug(
        "Cone of %s map in %s moves: %s",
        morphism.kind,
        graph.moves,
        ", ".join(str(s.key()) for s in summands),
    )
    return ConeDecomposition(summands)


def predictedComplex(pres, field, decomposition):
    """Direct sum of the summand complexes"""
    result = complexes.zeroComplex(pres, field)
    for obj in decomposition.summands:
        result = complexes.directSum(result, complexes.objectComplex(pres, field, obj))
    return result


def verifyCone(pres, field, morphism, source, target, decomposition):
    """Compare a decomposition against the raw cone: homology
    dimensions and isomorphism in the homotopy category"""
    chainMap = realize.realize(
        morphism,
        complexes.objectComplex(pres, field, source),
        complexes.objectComplex(pres, field, target),
    )
    raw = complexes.coneComplex(chainMap)
    predicted = predictedComplex(pres, field, decomposition)
    homology = complexes.homologyDims(raw) == complexes.homologyDims(predicted)
    isomorphic = homology and complexes.isIsomorphic(predicted, raw)
    return {"homology": homology, "isomorphic": isomorphic}


def resolveCrossing(rg, field, first, second, index):
    """Curves carrying the cone summands of the intersection index
    between two graded curves"""
    pres = rg.presentation
    source = curves.stringFromArc(rg, first)
    target = curves.stringFromArc(rg, second)
    basis = morphisms.standardBasis(pres, field, source, target)
    if not 0 <= index < len(basis):
        raise exceptions.ConeException(
            f"Intersection index {index} out of range, {len(basis)} intersections"
        )
    decomposition = mappingCone(pres, field, basis[index], source, target)
    return tuple(curves.arcFromString(rg, obj) for obj in decomposition.summands)
