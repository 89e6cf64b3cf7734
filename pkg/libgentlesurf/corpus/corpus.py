"""
    Named small algebras and the random gentle corpus
"""
import logging
import random

from libgentlesurf import exceptions as baseExceptions
from libgentlesurf.algebra import algebra
from libgentlesurf.algebra import parser
from libgentlesurf.algebra.types import Arrow, Quiver, GentlePresentation
from libgentlesurf.strings import strings

log = logging.getLogger(__name__)

NAMED = {
    "A2": """
        vertex 1
        vertex 2
        arrow a 1 2
    """,
    "A3": """
        vertex 1
        vertex 2
        vertex 3
        arrow a1 1 2
        arrow a2 2 3
    """,
    "A3rel": """
        vertex 1
        vertex 2
        vertex 3
        arrow a1 1 2
        arrow a2 2 3
        rel a1 a2
    """,
    "A4": """
        vertex 1
        vertex 2
        vertex 3
        vertex 4
        arrow a1 1 2
        arrow a2 2 3
        arrow a3 3 4
    """,
    "A4rel": """
        vertex 1
        vertex 2
        vertex 3
        vertex 4
        arrow a1 1 2
        arrow a2 2 3
        arrow a3 3 4
        rel a1 a2
        rel a2 a3
    """,
    "kronecker": """
        vertex 1
        vertex 2
        arrow a1 1 2
        arrow a2 1 2
    """,
    "cycle3": """
        vertex 1
        vertex 2
        vertex 3
        arrow a 1 2
        arrow b 2 3
        arrow c 3 1
        rel a b
        rel b c
        rel c a
    """,
    "loop": """
        vertex 1
        arrow x 1 1
        rel x x
    """,
}

# algebras of the morphism, cone and triangle sweeps
SWEEP = ("A2", "A3", "A3rel", "A4rel", "kronecker", "cycle3", "loop")


def named(name):
    """Parsed named algebra"""
    try:
        text = NAMED[name]
    except KeyError as e:
        raise baseExceptions.GentleSurfException(
            f"Unknown named algebra [{name}]"
        ) from e
    return parser.parsePresentation(text, name=name)


def _relations(rng, quiver, density):
    """Gentle relation set: forced relations at vertices with two
    arrows on one side, optional ones kept with probability density"""
    relations = []
    for vertex in quiver.vertices:
        ins = list(quiver.incoming[vertex])
        outs = list(quiver.outgoing[vertex])
        if len(ins) == 2 and len(outs) == 2:
            rng.shuffle(outs)
            relations += [(ins[0], outs[0]), (ins[1], outs[1])]
        elif len(ins) == 2 and len(outs) == 1:
            relations.append((rng.choice(ins), outs[0]))
        elif len(ins) == 1 and len(outs) == 2:
            relations.append((ins[0], rng.choice(outs)))
        elif len(ins) == 1 and len(outs) == 1 and rng.random() < density:
            relations.append((ins[0], outs[0]))
    return relations


def _quiver(rng, config):
    count = rng.randint(2, max(2, config.maxVertices))
    vertices = [str(v + 1) for v in range(count)]
    outDegree = dict.fromkeys(vertices, 0)
    inDegree = dict.fromkeys(vertices, 0)
    arrows = []

    def place(source, target):
        if outDegree[source] >= 2 or inDegree[target] >= 2:
            return False
        outDegree[source] += 1
        inDegree[target] += 1
        arrows.append(Arrow(f"x{len(arrows) + 1}", source, target))
        return True

    for index in range(1, count):
        placed = False
        for other in rng.sample(vertices[:index], index):
            pair = (other, vertices[index])
            if rng.random() < 0.5:
                pair = pair[::-1]
            if place(*pair) or place(*pair[::-1]):
                placed = True
                break
        if not placed:
            return None

    extra = rng.randint(0, max(0, config.maxArrows - len(arrows)))
    for _ in range(extra):
        # loops are drawn like any other arrow
        source, target = rng.choice(vertices), rng.choice(vertices)
        place(source, target)
    return Quiver(vertices, arrows)


def randomPresentation(rng, config, name="", attempts=50):
    """Random connected, finite dimensional gentle presentation"""
    for _ in range(attempts):
        quiver = _quiver(rng, config)
        if quiver is None:
            continue
        relations = _relations(rng, quiver, config.relationDensity)
        if algebra.validateGentle(quiver, relations):
            continue
        return GentlePresentation(quiver, relations, name=name)
    raise baseExceptions.InvariantViolation(
        f"No gentle presentation drawn in {attempts} attempts"
    )


def randomCorpus(config):
    """Deterministic list of random presentations for config"""
    rng = random.Random(config.seed)
    result = [
        randomPresentation(rng, config, name=f"random-{number}")
        for number in range(config.count)
    ]
    log.debug("Generated %s random presentations", len(result))
    return result


def isTree(pres):
    """Underlying graph without cycles"""
    return algebra.bettiNumber(pres) == 0


def hasOneCycle(pres):
    """Underlying graph with exactly one cycle"""
    return algebra.bettiNumber(pres) == 1


def allBands(pres, maxLetters):
    """Canonical bands with at most maxLetters letters, graded from 0"""
    found = {}
    for string in strings.allStrings(pres, maxLetters):
        if string.isTrivial or string.end != string.vertex:
            continue
        if not strings.isBand(pres, string.steps):
            continue
        band = strings.makeBand(pres, string.steps)
        if len(band.letters) <= maxLetters:
            found[strings.canonicalForm(band)] = None
    return sorted(found, key=lambda b: (len(b.letters), b.key()))
