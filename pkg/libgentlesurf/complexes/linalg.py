"""
    Exact linear algebra on sparse vectors

    Vectors are dicts mapping hashable keys to nonzero field elements.
    They are stacked as the columns of a sparse DomainMatrix over the
    domain of the field.
"""
import logging
from sympy.polys.matrices import DomainMatrix

log = logging.getLogger(__name__)


def addInto(field, target, vector, factor=1):
    """target += factor * vector, zero entries are dropped"""
    for key, value in vector.items():
        total = field.add(target.get(key, 0), field.mul(value, factor))
        if total == 0:
            target.pop(key, None)
        else:
            target[key] = total
    return target


def columnMatrix(field, vectors):
    """Sparse matrix with one column per vector, rows indexed by the
    keys in order of appearance"""
    rows = {}
    elements = {}
    for column, vector in enumerate(vectors):
        for key, value in vector.items():
            row = rows.setdefault(key, len(rows))
            elements.setdefault(row, {})[column] = field.toDomain(value)
    return DomainMatrix(elements, (len(rows), len(vectors)), field.domain)


def rank(field, vectors):
    """Rank of a list of sparse vectors"""
    vectors = [v for v in vectors if v]
    if not vectors:
        return 0
    return columnMatrix(field, vectors).rank()


def independent(field, vectors):
    """Indices of the vectors not in the span of the ones before
    them"""
    if not any(vectors):
        return []
    _, pivots = columnMatrix(field, vectors).rref()
    return list(pivots)


def kernel(field, columns):
    """Kernel basis of the map sending basis element j to columns[j],
    returned as coefficient dicts over the indices j"""
    if not columns:
        return []
    if not any(columns):
        return [{index: field.element(1)} for index in range(len(columns))]
    nullspace = columnMatrix(field, columns).nullspace()
    result = []
    for row in nullspace.to_list():
        combination = {}
        for index, value in enumerate(row):
            value = field.fromDomain(value)
            if value != 0:
                combination[index] = value
        result.append(combination)
    log.debug("Kernel of %s columns has dimension %s", len(columns), len(result))
    return result
