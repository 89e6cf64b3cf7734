"""
    Presentation file parser
"""
import logging

from libgentlesurf.algebra import exceptions
from libgentlesurf.algebra import algebra
from libgentlesurf.algebra.types import Arrow, Quiver, GentlePresentation

log = logging.getLogger(__name__)


def parsePresentation(text, name="", validate=True):
    """Parse line based presentation:

        vertex <id>
        arrow <id> <source> <target>
        rel <arrowid> <arrowid>

    '#' starts a comment. Raises PresentationSyntaxError with the
    offending line number, GentleViolation or InfiniteDimensional.
    """
    vertices = []
    arrows = []
    arrowNames = set()
    relations = []
    for lineNo, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "vertex":
            if len(tokens) != 2:
                raise exceptions.PresentationSyntaxError(
                    "expected: vertex <id>", lineNo
                )
            if tokens[1] in vertices:
                raise exceptions.PresentationSyntaxError(
                    f"duplicate vertex [{tokens[1]}]", lineNo
                )
            vertices.append(tokens[1])
        elif keyword == "arrow":
            if len(tokens) != 4:
                raise exceptions.PresentationSyntaxError(
                    "expected: arrow <id> <source> <target>", lineNo
                )
            _, arrowId, source, target = tokens
            if arrowId in arrowNames:
                raise exceptions.PresentationSyntaxError(
                    f"duplicate arrow [{arrowId}]", lineNo
                )
            for vertex in (source, target):
                if vertex not in vertices:
                    raise exceptions.PresentationSyntaxError(
                        f"undeclared vertex [{vertex}]", lineNo
                    )
            arrowNames.add(arrowId)
            arrows.append(Arrow(arrowId, source, target))
        elif keyword == "rel":
            if len(tokens) != 3:
                raise exceptions.PresentationSyntaxError(
                    "expected: rel <arrowid> <arrowid>", lineNo
                )
            for arrowId in tokens[1:]:
                if arrowId not in arrowNames:
                    raise exceptions.PresentationSyntaxError(
                        f"undeclared arrow [{arrowId}]", lineNo
                    )
            relations.append((tokens[1], tokens[2]))
        else:
            raise exceptions.PresentationSyntaxError(
                f"unknown keyword [{keyword}]", lineNo
            )

    if not vertices:
        raise exceptions.PresentationSyntaxError("no vertices declared")

    quiver = Quiver(vertices, arrows)
    pres = GentlePresentation(quiver, relations, name=name)
    if not validate:
        return pres

    violations = algebra.gentleViolations(quiver, pres.relations)
    if violations:
        raise exceptions.GentleViolation(violations)
    cycle = algebra.relationFreeCycle(quiver, pres.relations)
    if cycle is not None:
        raise exceptions.InfiniteDimensional(cycle)
    if pres.degenerate:
        log.info("Presentation [%s] is the one vertex algebra", name)
    log.debug(
        "Parsed presentation [%s]: %s vertices, %s arrows, %s relations",
        name,
        len(vertices),
        len(arrows),
        len(pres.relations),
    )
    return pres


def loadPresentation(fileName):
    """Read and parse presentation file"""
    try:
        with open(fileName, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise exceptions.PresentationFileError(
            f"Unable to read presentation: [{e}]"
        ) from e
    return parsePresentation(text, name=fileName)
