"""Combinatorial coefficients by signed counting of complete flags.

At a critical vertex ``A`` of the Minkowski sum, ``c_A`` is the number of
chains ``A = G0 < G1 < ... < Gn = sum`` of faces with ``dim Gi = i`` such
that the first ``i`` summands of ``Gi`` are positive-dimensional and the
remaining ``n - i`` are points, each chain weighted by the orientation of
the frame ``(b(G1) - A, ..., b(Gn) - A)`` where ``b`` is the vertex
barycenter. The ambient orientation is the standard one and the polytopes
are taken in the order given.
"""

from dataclasses import dataclass
from types import MappingProxyType

from . import _exact
from .errors import ConsistencyError, NoFlags, NotCritical, NotGeneric
from .geometry import critical_vertices, genericity


@dataclass(frozen=True)
class Flag:
    chain: tuple
    sign: int

    @property
    def vertex(self):
        return self.chain[0].point


def is_admissible(face, i):
    """Summands 1..i positive-dimensional, summands i+1..n points."""
    dims = face.summand_dims
    return all(d >= 1 for d in dims[:i]) and all(d == 0 for d in dims[i:])


def flag_sign(chain, vertex=None):
    """Orientation of the barycentric frame of a complete flag."""
    a = chain[0].point if vertex is None else tuple(vertex)
    frame = [_exact.sub(g.barycenter(), a) for g in chain[1:]]
    d = _exact.det(frame)
    if d == 0:
        raise ConsistencyError("degenerate flag frame; face lattice is inconsistent")
    return 1 if d > 0 else -1


def _has_point_summand(sc):
    return any(p.is_point for p in sc.summands)


def _require_critical(sc, vertex):
    vertex = tuple(vertex)
    if vertex not in critical_vertices(sc):
        raise NotCritical(f"{vertex} is not a critical vertex of the sum")
    return vertex


def admissible_flags(sc, vertex):
    vertex = _require_critical(sc, vertex)
    n = sc.n
    start = sc.vertex_face(vertex)
    flags = []

    def extend(chain):
        i = len(chain)
        if i == n + 1:
            flags.append(Flag(tuple(chain), flag_sign(chain, vertex)))
            return
        for g in sc.covers(chain[-1]):
            if is_admissible(g, i):
                extend(chain + [g])

    extend([start])
    return flags


def combinatorial_coefficient(sc, vertex):
    if _has_point_summand(sc):
        raise NoFlags("a summand is a single point; no admissible flags exist")
    return sum(f.sign for f in admissible_flags(sc, vertex))


@dataclass(frozen=True)
class CoefficientTable:
    """Combinatorial coefficients at every vertex of the sum."""

    coefficients: MappingProxyType
    polytope_order: tuple

    def __getitem__(self, vertex):
        return self.coefficients[tuple(vertex)]

    def items(self):
        return sorted(self.coefficients.items())

    def __len__(self):
        return len(self.coefficients)


def coefficient_table(sc):
    ok, witness = genericity(sc)
    if not ok:
        raise NotGeneric("polytopes are not in generic relative position", witness)
    if _has_point_summand(sc):
        raise NoFlags("a summand is a single point; no admissible flags exist")
    table = {a: combinatorial_coefficient(sc, a) for a in sc.vertices}
    return CoefficientTable(MappingProxyType(table), sc.summands)
