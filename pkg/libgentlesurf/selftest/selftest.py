"""
    Cross-check suite over the named algebras and the random corpus
"""
import logging
import random
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor, as_completed

from libgentlesurf import exceptions as baseExceptions
from libgentlesurf.algebra import algebra
from libgentlesurf.algebra import exceptions as algebraExceptions
from libgentlesurf.aginvariant import aginvariant
from libgentlesurf.aginvariant.types import AGInvariant
from libgentlesurf.complexes import complexes
from libgentlesurf.complexes import exceptions as complexExceptions
from libgentlesurf.cones import cones
from libgentlesurf.cones import exceptions as coneExceptions
from libgentlesurf.cones import rotation
from libgentlesurf.corpus import corpus
from libgentlesurf.morphisms import exceptions as morphismExceptions
from libgentlesurf.morphisms import morphisms
from libgentlesurf.morphisms import realize
from libgentlesurf.ribbon import exceptions as ribbonExceptions
from libgentlesurf.ribbon import koszul
from libgentlesurf.ribbon import ribbon
from libgentlesurf.strings import curves
from libgentlesurf.strings import exceptions as stringExceptions
from libgentlesurf.strings import parser
from libgentlesurf.strings import strings
from libgentlesurf.strings.types import GradedBand, GradedString, Tail

log = logging.getLogger(__name__)

Result = namedtuple("Result", ["family", "ok", "detail"])

FAMILIES = (
    "surface",
    "corollaries",
    "ag",
    "morphisms",
    "cones",
    "translate",
    "triangles",
    "dictionary",
    "koszul",
)

LIBRARY_ERRORS = (
    baseExceptions.GentleSurfException,
    algebraExceptions.PresentationError,
    ribbonExceptions.RibbonException,
    stringExceptions.StringException,
    complexExceptions.ComplexException,
    morphismExceptions.MorphismException,
    coneExceptions.ConeException,
)

SPOT_VALUES = {
    "A4": [(5, 3)],
    "A4rel": [(5, 3)],
    "kronecker": [(1, 1), (1, 1)],
    "cycle3": [(0, 3), (3, 0)],
}


def _surface(pres):
    rg = ribbon.buildRibbonGraph(pres)
    return rg, ribbon.surfaceInvariants(rg)


def checkWorkedExamples():
    """Both A4 presentations give a disc with five marked points"""
    results = []
    for name in ("A4", "A4rel"):
        _, model = _surface(corpus.named(name))
        ok = (
            model.genus == 0
            and model.boundaries == 1
            and model.faces[0].marked == 5
        )
        results.append(Result("surface", ok, f"{name}: {model.toJson()}"))
    same = aginvariant.sameAg(corpus.named("A4"), corpus.named("A4rel"))
    results.append(Result("surface", same, "A4 and A4rel share the AG invariant"))
    return results


def checkCorollaries(pres):
    """Trees give discs, one cycle gives an annulus, and the Betti
    number matches the surface"""
    _, model = _surface(pres)
    betti, rank = koszul.pi1RankCheck(pres)
    results = [Result("corollaries", betti == rank, f"{pres.name}: betti {betti} rank {rank}")]
    if corpus.isTree(pres):
        ok = model.genus == 0 and model.boundaries == 1
        results.append(Result("corollaries", ok, f"{pres.name}: tree gives {model.toJson()}"))
    elif corpus.hasOneCycle(pres):
        ok = model.genus == 0 and model.boundaries == 2
        results.append(Result("corollaries", ok, f"{pres.name}: one cycle gives {model.toJson()}"))
    return results


def checkAg(pres):
    """Path algorithm and surface formula agree"""
    rg = ribbon.buildRibbonGraph(pres)
    paths = aginvariant.agPaths(pres)
    surface = aginvariant.agSurface(rg)
    results = [
        Result("ag", paths == surface, f"{pres.name}: {paths.toJson()} vs {surface.toJson()}"),
        Result("ag", aginvariant.polygonCheck(rg), f"{pres.name}: polygon side counts"),
    ]
    faceList = ribbon.faces(rg)
    ends = sum(len(laminate.faces) for laminate in ribbon.lamination(rg, faceList))
    tally = sum(face.laminateEnds for face in faceList)
    required = ends if rg.degenerate else 2 * len(pres.vertices)
    results.append(
        Result("ag", tally == ends == required, f"{pres.name}: {tally} laminate ends")
    )
    if pres.name in SPOT_VALUES:
        expected = AGInvariant.fromPairs(SPOT_VALUES[pres.name])
        results.append(Result("ag", paths == expected, f"{pres.name}: spot value {paths.toJson()}"))
    return results


def checkKoszul(pres):
    """Double dual and homeomorphy of the dual surface"""
    dual, finite = koszul.koszulDual(pres)
    cycles = algebra.forbiddenThreads(pres).fullCycles
    if cycles:
        return [Result("koszul", not finite, f"{pres.name}: dual flagged infinite")]
    if not finite:
        return [Result("koszul", False, f"{pres.name}: dual infinite without relation cycle")]
    again, _ = koszul.koszulDual(dual)
    _, model = _surface(pres)
    _, dualModel = _surface(dual)
    return [
        Result("koszul", algebra.isomorphic(again, pres), f"{pres.name}: double dual"),
        Result(
            "koszul",
            (model.genus, model.boundaries) == (dualModel.genus, dualModel.boundaries),
            f"{pres.name}: dual surface {dualModel.toJson()}",
        ),
    ]


def _describe(pres, source, target):
    return f"{pres.name}: {parser.formatObject(source)} -> {parser.formatObject(target)}"


def checkMorphisms(pres, field, source, targets, withCones=True):
    """Standard basis against the oracle, then every cone against the
    raw cone"""
    results = []
    for target in targets:
        detail = _describe(pres, source, target)
        try:
            sourceCx = complexes.objectComplex(pres, field, source)
            targetCx = complexes.objectComplex(pres, field, target)
            basis = morphisms.standardBasis(pres, field, source, target)
            oracle = complexes.homDimOracle(sourceCx, targetCx)
            ok = len(basis) == oracle
            if ok and basis:
                realized = realize.realizeAll(basis, sourceCx, targetCx)
                ok = complexes.rankModuloHomotopy(sourceCx, targetCx, realized) == oracle
            results.append(Result("morphisms", ok, f"{detail}: basis {len(basis)} oracle {oracle}"))
        except LIBRARY_ERRORS as e:
            results.append(Result("morphisms", False, f"{detail}: {e}"))
            continue
        if not withCones:
            continue
        for morphism in basis:
            where = f"{detail} {morphism.kind}@{morphism.anchor}"
            try:
                decomposition = cones.mappingCone(pres, field, morphism, source, target)
                verdict = cones.verifyCone(pres, field, morphism, source, target, decomposition)
                results.append(Result("cones", all(verdict.values()), f"{where}: {verdict}"))
            except LIBRARY_ERRORS as e:
                results.append(Result("cones", False, f"{where}: {e}"))
    return results


def checkTranslate(pres, field, objects, power, shift):
    """Iterated inverse translate equals a shift; bands are fixed"""
    paths = algebra.maximalPaths(pres)
    results = []
    for obj in objects:
        detail = f"{pres.name}: {parser.formatObject(obj)}"
        try:
            if isinstance(obj, GradedBand):
                fixed = rotation.inverseArTranslate(pres, paths, obj)
                results.append(Result("translate", fixed == obj, f"{detail} fixed"))
                continue
            image = rotation.translatePower(pres, paths, obj, power)
            expected = obj.shifted(shift)
            ok = strings.sameObject(image, expected) or complexes.isIsomorphic(
                complexes.objectComplex(pres, field, image),
                complexes.shiftComplex(complexes.objectComplex(pres, field, obj), shift),
            )
            results.append(Result("translate", ok, f"{detail} -> {parser.formatObject(image)}"))
        except coneExceptions.RotationException as e:
            results.append(Result("translate", None, f"{detail}: {e}"))
        except LIBRARY_ERRORS as e:
            results.append(Result("translate", False, f"{detail}: {e}"))
    return results


def checkTriangles(pres, field, objects):
    """Euler additivity and vanishing composites of AR triangles"""
    paths = algebra.maximalPaths(pres)
    results = []
    for obj in objects:
        detail = f"{pres.name}: {parser.formatObject(obj)}"
        try:
            triangle = rotation.arTriangle(pres, field, paths, obj)
            verdict = rotation.checkTriangle(pres, field, triangle)
            results.append(Result("triangles", all(verdict.values()), f"{detail}: {verdict}"))
        except coneExceptions.RotationException as e:
            results.append(Result("triangles", None, f"{detail}: {e}"))
        except LIBRARY_ERRORS as e:
            results.append(Result("triangles", False, f"{detail}: {e}"))
    return results


def checkDictionary(pres, objects):
    """String to curve and back"""
    rg = ribbon.buildRibbonGraph(pres)
    results = []
    for obj in objects:
        detail = f"{pres.name}: {parser.formatObject(obj)}"
        try:
            back = curves.stringFromArc(rg, curves.arcFromString(rg, obj))
            results.append(Result("dictionary", strings.sameObject(back, obj), detail))
        except LIBRARY_ERRORS as e:
            results.append(Result("dictionary", False, f"{detail}: {e}"))
    return results


def _relationCycle(pres, arrow):
    period = [arrow]
    current = pres.relationPredecessor(arrow)
    while current is not None and current != arrow and len(period) <= len(pres.arrows):
        period.append(current)
        current = pres.relationPredecessor(current)
    return period if current == arrow else None


def checkInfinite(pres):
    """Trivial strings with a tail winding around an unmarked
    boundary, to the arc and back"""
    rg = ribbon.buildRibbonGraph(pres)
    results = []
    for arrow in pres.arrows:
        period = _relationCycle(pres, arrow)
        if period is None:
            continue
        vertex = pres.quiver.target(arrow)
        detail = f"{pres.name}: e@{vertex} winding along {' '.join(period)}"
        try:
            infinite = strings.makeInfinite(
                pres, GradedString(vertex, (), (0,)), rightTail=Tail((), tuple(period))
            )
            back = curves.stringFromArc(rg, curves.arcFromString(rg, infinite))
            results.append(Result("dictionary", strings.sameObject(back, infinite), detail))
        except LIBRARY_ERRORS as e:
            results.append(Result("dictionary", False, f"{detail}: {e}"))
    return results


def _objects(pres, config):
    found = list(strings.allStrings(pres, config.maxLetters))
    for band in corpus.allBands(pres, config.maxLetters):
        found.append(band)
        found.append(GradedBand(band.letters, band.grading, 2, band.m))
    return found


def _dictionarySample(presentations, config, size=1000):
    rng = random.Random(config.seed)
    pools = []
    for pres in presentations:
        if pres.degenerate:
            continue
        pool = _objects(pres, config)
        if pool:
            pools.append((pres, pool))
    chosen = {}
    for _ in range(size):
        pres, pool = rng.choice(pools)
        obj = rng.choice(pool).shifted(rng.randint(-config.gradingRange, config.gradingRange))
        chosen.setdefault(pres.name, (pres, []))[1].append(obj)
    return list(chosen.values())


class Selftest:
    """Builds and runs the check tasks"""

    def __init__(self, config, field, workers=1):
        self.config = config
        self.field = field
        self.workers = workers

    def tasks(self):
        """(family, callable, arguments) list"""
        config = self.config
        field = self.field
        named = {name: corpus.named(name) for name in corpus.NAMED}
        generated = corpus.randomCorpus(config)
        everything = list(named.values()) + generated
        tasks = [("surface", checkWorkedExamples, ())]
        for pres in generated:
            tasks.append(("corollaries", checkCorollaries, (pres,)))
        for pres in everything:
            tasks.append(("ag", checkAg, (pres,)))
            tasks.append(("koszul", checkKoszul, (pres,)))

        grades = range(-config.gradingRange, config.gradingRange + 1)
        for name in corpus.SWEEP:
            pres = named[name]
            objects = _objects(pres, config)
            if name != "kronecker":
                objects = [o for o in objects if not isinstance(o, GradedBand)]
            targets = [obj.shifted(-g) for obj in objects for g in grades]
            for source in objects:
                tasks.append(("morphisms", checkMorphisms, (pres, field, source, targets)))
            stringObjects = [o for o in objects if not isinstance(o, GradedBand)]
            tasks.append(("triangles", checkTriangles, (pres, field, stringObjects)))
            bands = [o for o in objects if isinstance(o, GradedBand)]
            if bands:
                tasks.append(("translate", checkTranslate, (pres, field, bands, 1, 0)))

        hereditary = named["A3"]
        strings3 = strings.allStrings(hereditary, config.maxLetters)
        tasks.append(("translate", checkTranslate, (hereditary, field, strings3, 4, 2)))

        for pres, objects in _dictionarySample(everything, config):
            tasks.append(("dictionary", checkDictionary, (pres, objects)))
        for pres in everything:
            if not pres.degenerate:
                tasks.append(("dictionary", checkInfinite, (pres,)))
        return tasks

    def run(self, tasks=None, progress=None):
        """Run tasks, all by default, returns the report dict"""
        if tasks is None:
            tasks = self.tasks()
        summary = {family: {"passed": 0, "failed": 0, "skipped": 0} for family in FAMILIES}
        failures = []
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            futures = {
                executor.submit(function, *arguments): family
                for family, function, arguments in tasks
            }
            for future in as_completed(futures):
                try:
                    results = future.result()
                except LIBRARY_ERRORS as e:
                    results = [Result(futures[future], False, str(e))]
                for result in results:
                    counts = summary[result.family]
                    if result.ok is None:
                        counts["skipped"] += 1
                    elif result.ok:
                        counts["passed"] += 1
                    else:
                        counts["failed"] += 1
                        failures.append({"family": result.family, "detail": result.detail})
                        log.error("Check failed [%s]: %s", result.family, result.detail)
                if progress is not None:
                    progress.update(1)
        failures.sort(key=lambda f: (f["family"], f["detail"]))
        ok = not failures
        log.info(
            "Selftest finished: %s checks passed, %s failed",
            sum(c["passed"] for c in summary.values()),
            len(failures),
        )
        return {
            "ok": ok,
            "field": self.field.name,
            "config": {
                "maxVertices": self.config.maxVertices,
                "maxArrows": self.config.maxArrows,
                "relationDensity": self.config.relationDensity,
                "count": self.config.count,
                "seed": self.config.seed,
                "maxLetters": self.config.maxLetters,
                "gradingRange": self.config.gradingRange,
            },
            "families": summary,
            "failures": failures,
        }
