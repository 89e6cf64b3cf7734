"""
    String and band complexes, hom dimensions in the homotopy
    category, homology, cones and isomorphism testing
"""
import logging
import random
import itertools

from libgentlesurf import exceptions as baseExceptions
from libgentlesurf.algebra import algebra
from libgentlesurf.complexes import exceptions
from libgentlesurf.complexes import linalg
from libgentlesurf.complexes.types import ProjectiveComplex, ChainMap, addEntry
from libgentlesurf.strings.types import GradedString, GradedBand

log = logging.getLogger(__name__)


def stringComplex(pres, field, string):
    """Complex of a finite graded string: P_vi in degree mu_i, one
    component per letter"""
    cx = ProjectiveComplex(pres, field)
    for degree, vertex in zip(string.grading, string.vertices):
        cx.addSummand(degree, vertex)
    for position, letter in enumerate(string.letters):
        if letter.direct:
            cx.addEntry(position + 1, position, letter.path, 1)
        else:
            cx.addEntry(position, position + 1, letter.path, 1)
    checkSquareZero(cx)
    return cx


def jordanBlock(field, lam, size):
    """Entries (row, column) -> value of the Jordan block J_size(lam)"""
    value = field.element(lam)
    block = {(c, c): value for c in range(size)}
    for c in range(size - 1):
        block[(c, c + 1)] = 1
    return block


def bandComplex(pres, field, band):
    """Complex of a graded band, every vertex carries m copies of its
    projective and the closing letter the Jordan block"""
    count = len(band.letters)
    size = band.m
    cx = ProjectiveComplex(pres, field)
    for degree, vertex in zip(band.grading, band.vertices):
        for _ in range(size):
            cx.addSummand(degree, vertex)
    identity = {(c, c): 1 for c in range(size)}
    for position, letter in enumerate(band.letters):
        following = (position + 1) % count
        block = identity
        if position == count - 1:
            block = jordanBlock(field, band.lam, size)
        if letter.direct:
            source, target = position, following
        else:
            source, target = following, position
        for (row, column), value in block.items():
            cx.addEntry(target * size + row, source * size + column, letter.path, value)
    checkSquareZero(cx)
    return cx


def objectComplex(pres, field, obj):
    """Complex of a graded string or band"""
    if isinstance(obj, GradedString):
        return stringComplex(pres, field, obj)
    if isinstance(obj, GradedBand):
        return bandComplex(pres, field, obj)
    raise baseExceptions.UnsupportedObject(
        f"No finite complex for object of type {type(obj).__name__}"
    )


def zeroComplex(pres, field):
    """Complex without summands"""
    return ProjectiveComplex(pres, field)


def composeEntries(pres, field, first, second):
    """Components of the composite: apply first, then second"""
    bySource = {}
    for (target, source), combination in second.items():
        bySource.setdefault(source, []).append((target, combination))
    result = {}
    for (middle, source), left in first.items():
        for target, right in bySource.get(middle, ()):
            for p, a in left.items():
                for q, b in right.items():
                    path = pres.compose(p, q)
                    if path is not None:
                        addEntry(field, result, (target, source), path, field.mul(a, b))
    return result


def checkSquareZero(cx):
    """Raise DifferentialNotSquareZero if d.d is nonzero"""
    square = composeEntries(cx.presentation, cx.field, cx.differential, cx.differential)
    if square:
        raise exceptions.DifferentialNotSquareZero(
            f"d^2 has {len(square)} nonzero components"
        )


def _flatten(entries):
    vector = {}
    for (target, source), combination in entries.items():
        for path, coef in combination.items():
            vector[(target, source, path)] = coef
    return vector


def _combine(field, entries, factor, into):
    for key, combination in entries.items():
        for path, coef in combination.items():
            addEntry(field, into, key, path, field.mul(coef, factor))
    return into


def homBasis(source, target, shift=0):
    """Basis of graded maps source^n -> target^(n+shift), one element
    per summand pair and nonzero path"""
    pres = source.presentation
    basis = []
    for j, summand in enumerate(source.summands):
        for i, other in enumerate(target.summands):
            if other.degree != summand.degree + shift:
                continue
            for path in algebra.pathsFromTo(pres, summand.vertex, other.vertex):
                basis.append({(i, j): {path: 1}})
    return basis


def chainDefect(source, target, entries):
    """d_Y f - f d_X of a graded map"""
    pres = source.presentation
    field = source.field
    result = composeEntries(pres, field, entries, target.differential)
    twisted = composeEntries(pres, field, source.differential, entries)
    return _combine(field, twisted, field.neg(1), result)


def homotopyImage(source, target, entries):
    """d_Y h + h d_X of a degree -1 map"""
    pres = source.presentation
    field = source.field
    result = composeEntries(pres, field, entries, target.differential)
    twisted = composeEntries(pres, field, source.differential, entries)
    return _combine(field, twisted, 1, result)


def isChainMap(chainMap):
    """Map commutes with the differentials"""
    return not chainDefect(chainMap.source, chainMap.target, chainMap.components)


def checkChainMap(chainMap):
    """Raise NotAChainMap unless the map commutes with differentials"""
    defect = chainDefect(chainMap.source, chainMap.target, chainMap.components)
    if defect:
        raise exceptions.NotAChainMap(
            f"Map fails to commute in {len(defect)} components"
        )


def _homotopies(source, target):
    """Flattened images d_Y h + h d_X of the degree -1 maps"""
    return [_flatten(homotopyImage(source, target, h)) for h in homBasis(source, target, -1)]


def homDimOracle(source, target):
    """Dimension of maps source -> target in the homotopy category"""
    field = source.field
    basis = homBasis(source, target)
    defects = linalg.rank(field, [_flatten(chainDefect(source, target, f)) for f in basis])
    homotopies = linalg.rank(field, _homotopies(source, target))
    result = len(basis) - defects - homotopies
    log.debug(
        "Hom: %s maps, defect rank %s, homotopy rank %s -> %s",
        len(basis),
        defects,
        homotopies,
        result,
    )
    return result


def cycles(source, target):
    """Basis of chain maps source -> target as component dicts"""
    field = source.field
    basis = homBasis(source, target)
    columns = [_flatten(chainDefect(source, target, f)) for f in basis]
    result = []
    for combination in linalg.kernel(field, columns):
        entries = {}
        for index, coef in combination.items():
            _combine(field, basis[index], coef, entries)
        result.append(entries)
    return result


def homBasisModHomotopy(source, target):
    """Chain maps forming a basis of the morphisms in the homotopy
    category"""
    homotopies = _homotopies(source, target)
    found = cycles(source, target)
    kept = linalg.independent(source.field, homotopies + [_flatten(e) for e in found])
    return [
        ChainMap(source, target, found[index - len(homotopies)])
        for index in kept
        if index >= len(homotopies)
    ]


def rankModuloHomotopy(source, target, maps):
    """Dimension of the span of chain maps in the homotopy category"""
    field = source.field
    homotopies = _homotopies(source, target)
    spanned = homotopies + [_flatten(chainMap.components) for chainMap in maps]
    return linalg.rank(field, spanned) - linalg.rank(field, homotopies)


def isNullHomotopic(chainMap):
    """Map vanishes in the homotopy category"""
    return rankModuloHomotopy(chainMap.source, chainMap.target, [chainMap]) == 0


def moduleBasis(pres, vertex):
    """Paths ending at vertex, the basis of P_vertex"""
    return tuple(p for p in algebra.pathBasis(pres) if p.end == vertex)


def _differentialRank(cx, degree):
    pres = cx.presentation
    bySource = {}
    for (target, source), combination in cx.differential.items():
        bySource.setdefault(source, []).append((target, combination))
    vectors = []
    for j in cx.at(degree):
        for q in moduleBasis(pres, cx.summands[j].vertex):
            vector = {}
            for target, combination in bySource.get(j, ()):
                for p, coef in combination.items():
                    path = pres.compose(q, p)
                    if path is not None:
                        linalg.addInto(cx.field, vector, {(target, path): coef})
            vectors.append(vector)
    return linalg.rank(cx.field, vectors)


def homologyDims(cx):
    """Map degree -> dimension of the cohomology, zeros omitted"""
    pres = cx.presentation
    result = {}
    for degree in cx.degrees:
        size = sum(len(moduleBasis(pres, cx.summands[j].vertex)) for j in cx.at(degree))
        value = size - _differentialRank(cx, degree) - _differentialRank(cx, degree - 1)
        if value:
            result[degree] = value
    return result


def eulerCharacteristic(cx):
    """Alternating sum of the summand dimensions"""
    pres = cx.presentation
    return sum(
        (-1) ** (s.degree % 2) * len(moduleBasis(pres, s.vertex)) for s in cx.summands
    )


def shiftComplex(cx, amount):
    """Degrees decreased by amount, differential sign (-1)^amount"""
    sign = cx.field.element(-1 if amount % 2 else 1)
    result = ProjectiveComplex(cx.presentation, cx.field)
    for summand in cx.summands:
        result.addSummand(summand.degree - amount, summand.vertex)
    _combine(cx.field, cx.differential, sign, result.differential)
    return result


def directSum(first, second):
    """Summands of second follow the summands of first"""
    result = ProjectiveComplex(first.presentation, first.field)
    result.summands = list(first.summands) + list(second.summands)
    offset = len(first.summands)
    _combine(first.field, first.differential, 1, result.differential)
    for (target, source), combination in second.differential.items():
        for path, coef in combination.items():
            result.addEntry(target + offset, source + offset, path, coef)
    return result


def compose(first, second):
    """Chain map second o first"""
    pres = first.source.presentation
    entries = composeEntries(pres, first.source.field, first.components, second.components)
    return ChainMap(first.source, second.target, entries)


def coneComplex(chainMap):
    """Cone with cone^n = Y^n + X^(n+1) and d = [[d_Y, f], [0, -d_X]]"""
    checkChainMap(chainMap)
    source = chainMap.source
    target = chainMap.target
    field = source.field
    cone = ProjectiveComplex(source.presentation, field)
    cone.summands = list(target.summands)
    offset = len(target.summands)
    for summand in source.summands:
        cone.addSummand(summand.degree - 1, summand.vertex)
    _combine(field, target.differential, 1, cone.differential)
    for (i, j), combination in chainMap.components.items():
        for path, coef in combination.items():
            cone.addEntry(i, j + offset, path, coef)
    for (i, j), combination in source.differential.items():
        for path, coef in combination.items():
            cone.addEntry(i + offset, j + offset, path, field.neg(coef))
    checkSquareZero(cone)
    return cone


def isZeroObject(cx):
    """Complex vanishes in the homotopy category"""
    return cx.isZero or homDimOracle(cx, cx) == 0


def _isIsomorphism(chainMap):
    return isZeroObject(coneComplex(chainMap))


def _candidate(source, target, basis, coefficients):
    field = source.field
    entries = {}
    for chainMap, coef in zip(basis, coefficients):
        _combine(field, chainMap.components, coef, entries)
    return ChainMap(source, target, entries)


def isIsomorphic(first, second, attempts=8, exhaustiveLimit=6, seed=0):
    """Complexes isomorphic in the homotopy category. Candidates are
    random combinations of a Hom basis, followed by all 0/1
    combinations for small Hom spaces."""
    if homologyDims(first) != homologyDims(second):
        return False
    dims = {
        homDimOracle(first, second),
        homDimOracle(second, first),
        homDimOracle(first, first),
        homDimOracle(second, second),
    }
    if len(dims) != 1:
        return False
    if dims == {0}:
        return True

    basis = homBasisModHomotopy(first, second)
    field = first.field
    rng = random.Random(seed)
    for _ in range(attempts):
        coefficients = [field.random(rng) for _ in basis]
        if not any(coefficients):
            continue
        if _isIsomorphism(_candidate(first, second, basis, coefficients)):
            return True
    if len(basis) <= exhaustiveLimit:
        for coefficients in itertools.product((0, 1), repeat=len(basis)):
            if not any(coefficients):
                continue
            if _isIsomorphism(_candidate(first, second, basis, coefficients)):
                return True
    log.debug("No isomorphism found among %s hom basis elements", len(basis))
    return False


def _formatCombination(combination):
    return " + ".join(f"{coef}*{path}" for path, coef in sorted(
        combination.items(), key=lambda item: item[0].sortKey()
    ))


def toJson(cx):
    """Json form: degrees with summand vertices, differential entries"""
    degrees = {}
    for summand in cx.summands:
        degrees.setdefault(str(summand.degree), []).append(summand.vertex)
    entries = []
    for (target, source), combination in sorted(cx.differential.items()):
        entries.append(
            {"from": source, "to": target, "entry": _formatCombination(combination)}
        )
    return {"degrees": degrees, "differential": entries}
