"""Exact convex geometry of lattice polytopes.

Newton polytopes, supporting faces, Minkowski sums together with the
decomposition of every face of the sum into faces of the summands, and the
test for generic relative position. Points are tuples of Python ints and all
arithmetic is exact.

Hulls are found by brute force: extreme points by one exact linear program
per candidate, facets either from affinely independent vertex subsets or,
for Minkowski sums, from normals orthogonal to edge directions of the
summands. This is slow in the asymptotic sense and fine for the desk-scale
instances the package targets (dimension at most four, tens of vertices).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import NamedTuple, Optional

from . import _exact
from ._exact import affine_rank, dot, sub
from .errors import DegenerateSum, DimensionMismatch, ZeroPolynomial

Point = tuple


def as_point(p):
    return tuple(int(x) for x in p)


def extreme_points(points):
    """Extreme points of a finite point set, sorted lexicographically.

    A point is dropped as soon as it lies in the convex hull of the points
    still kept, so later tests run against a shrinking set.
    """
    pts = sorted({as_point(p) for p in points})
    if not pts:
        raise ValueError("extreme_points of an empty set")
    if len(pts) <= 2:
        return tuple(pts)
    # the lexicographic extremes are always vertices
    kept = list(pts)
    for p in pts[1:-1]:
        others = [q for q in kept if q != p]
        if _exact.in_convex_hull(p, others):
            kept = others
    return tuple(kept)


class Facet(NamedTuple):
    normal: tuple  # primitive inner normal
    offset: int  # min of <normal, x> over the polytope
    vertices: frozenset


def _canonical_normal_key(v):
    # first nonzero coordinate positive, then lexicographic
    first = next((x for x in v if x != 0), 0)
    return (0 if first > 0 else 1, v)


def _facets_by_vertex_subsets(vertices, n):
    facets = {}
    for subset in combinations(vertices, n):
        base = subset[0]
        normal = _exact.orthogonal_normal([sub(p, base) for p in subset[1:]], n)
        if not any(normal):
            continue
        level = dot(normal, base)
        vals = [dot(normal, v) for v in vertices]
        if all(x <= level for x in vals):
            normal, level = tuple(-x for x in normal), -level
        elif not all(x >= level for x in vals):
            continue
        if normal not in facets:
            tight = frozenset(v for v in vertices if dot(normal, v) == level)
            facets[normal] = Facet(normal, level, tight)
    return sorted(facets.values(), key=lambda f: sorted(f.vertices))


def _face_closure(vertices, facets):
    """All nonempty faces as frozensets of vertices (the polytope included)."""
    whole = frozenset(vertices)
    faces = {whole}
    frontier = [frozenset(f.vertices) for f in facets]
    facet_sets = list(frontier)
    faces.update(frontier)
    while frontier:
        new = []
        for g in frontier:
            for f in facet_sets:
                h = g & f
                if h and h not in faces:
                    faces.add(h)
                    new.append(h)
        frontier = new
    return faces


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of finitely many lattice points, stored by its vertices."""

    vertices: tuple
    dim: int

    @classmethod
    def from_points(cls, points):
        verts = extreme_points(points)
        lengths = {len(v) for v in verts}
        if len(lengths) != 1:
            raise DimensionMismatch("points of different lengths")
        return cls(verts, affine_rank(verts))

    @property
    def ambient_dim(self):
        return len(self.vertices[0])

    @property
    def is_point(self):
        return self.dim == 0

    def support_face(self, xi):
        return support_face(self, xi)

    @cached_property
    def facets(self):
        """Facets of a full-dimensional polytope, as :class:`Facet` tuples."""
        n = self.ambient_dim
        if self.dim < n:
            raise DegenerateSum(f"polytope has dimension {self.dim} < {n}")
        if n == 1:
            lo, hi = self.vertices[0], self.vertices[-1]
            return [Facet((1,), lo[0], frozenset([lo])), Facet((-1,), -hi[0], frozenset([hi]))]
        return _facets_by_vertex_subsets(self.vertices, n)

    @cached_property
    def faces(self):
        """Face lattice of a full-dimensional polytope: sorted (dim, vertex tuple) pairs."""
        out = []
        for s in _face_closure(self.vertices, self.facets):
            out.append((affine_rank(s), tuple(sorted(s))))
        return sorted(out)

    def __str__(self):
        return "conv{" + ", ".join(str(v) for v in self.vertices) + "}"


@dataclass(frozen=True)
class Face:
    """A face of a lattice polytope, cut out as the argmin of a functional."""

    carrier: LatticePolytope = field(repr=False, compare=False)
    vertices: tuple
    dim: int

    @property
    def is_vertex(self):
        return self.dim == 0

    @property
    def point(self):
        if not self.is_vertex:
            raise ValueError("face is not a vertex")
        return self.vertices[0]

    def barycenter(self):
        k = len(self.vertices)
        return tuple(Fraction(sum(c), k) for c in zip(*self.vertices))


def newton_polytope(f):
    """Newton polytope of a Laurent polynomial (anything with ``support()``)."""
    support = list(f.support())
    if not support:
        raise ZeroPolynomial("the zero polynomial has no Newton polytope")
    return LatticePolytope.from_points(support)


def support_face(polytope, xi):
    xi = as_point(xi)
    if len(xi) != polytope.ambient_dim:
        raise DimensionMismatch("functional length differs from ambient dimension")
    vals = [dot(xi, v) for v in polytope.vertices]
    m = min(vals)
    verts = tuple(v for v, x in zip(polytope.vertices, vals) if x == m)
    return Face(polytope, verts, affine_rank(verts))


# -- Minkowski sums --------------------------------------------------------


@dataclass(frozen=True)
class SumFace:
    """A face of a Minkowski sum together with its summand decomposition."""

    vertices: tuple
    dim: int
    normal: tuple = field(compare=False)
    summands: tuple = field(compare=False)

    @property
    def is_locked(self):
        return any(g.dim == 0 for g in self.summands)

    @property
    def summand_dims(self):
        return tuple(g.dim for g in self.summands)

    @property
    def is_vertex(self):
        return self.dim == 0

    @property
    def point(self):
        return self.vertices[0]

    def barycenter(self):
        k = len(self.vertices)
        return tuple(Fraction(sum(c), k) for c in zip(*self.vertices))


class SumComplex:
    """The Minkowski sum of an ordered list of polytopes and its face lattice.

    Faces are kept in canonical order, by dimension and then by sorted vertex
    list. Every face remembers one functional from the relative interior of
    its normal cone (the sum of inner normals of the facets through it) and
    the supporting faces of the summands for that functional.
    """

    def __init__(self, summands, polytope, facets, faces):
        self.summands = tuple(summands)
        self.polytope = polytope
        self.facet_data = tuple(facets)
        self.faces = tuple(faces)
        self._by_vertices = {f.vertices: f for f in self.faces}

    @property
    def n(self):
        return len(self.summands)

    @property
    def vertices(self):
        return self.polytope.vertices

    @property
    def whole(self):
        return self.faces[-1]

    def faces_of_dim(self, d):
        return [f for f in self.faces if f.dim == d]

    @property
    def facets(self):
        return self.faces_of_dim(self.n - 1)

    def face(self, vertices):
        return self._by_vertices[tuple(sorted(as_point(v) for v in vertices))]

    def vertex_face(self, a):
        a = as_point(a)
        try:
            return self._by_vertices[(a,)]
        except KeyError:
            raise KeyError(f"{a} is not a vertex of the sum") from None

    def decomposition(self, a):
        """The summand vertices (A_1, ..., A_n) of a vertex A of the sum."""
        return tuple(g.point for g in self.vertex_face(a).summands)

    def cofaces(self, face):
        s = set(face.vertices)
        return [g for g in self.faces if g.dim > face.dim and s.issubset(g.vertices)]

    def covers(self, face):
        """Faces of dimension one higher that contain ``face``."""
        return [g for g in self.cofaces(face) if g.dim == face.dim + 1]

    def subfaces(self, face):
        s = set(face.vertices)
        return [g for g in self.faces if g.dim < face.dim and s.issuperset(g.vertices)]

    def __repr__(self):
        return f"SumComplex(n={self.n}, vertices={list(self.vertices)})"


def _directions(polytope):
    dirs = set()
    for u, v in combinations(polytope.vertices, 2):
        d = _exact.primitive(sub(v, u))
        if _canonical_normal_key(d)[0]:
            d = tuple(-x for x in d)
        dirs.add(d)
    return sorted(dirs)


def _sum_facets(polys, n):
    if n == 1:
        return [(1,), (-1,)]
    dirs = sorted({d for p in polys for d in _directions(p)})
    normals = []
    seen = set()
    for combo in combinations(dirs, n - 1):
        nu = _exact.orthogonal_normal(combo, n)
        if not any(nu):
            continue
        if _canonical_normal_key(nu)[0]:
            nu = tuple(-x for x in nu)
        if nu in seen:
            continue
        seen.add(nu)
        for cand in (nu, tuple(-x for x in nu)):
            faces = [support_face(p, cand) for p in polys]
            diffs = [sub(v, g.vertices[0]) for g in faces for v in g.vertices[1:]]
            if _exact.rank(diffs) == n - 1:
                normals.append(cand)
    return normals


def minkowski_sum(polys):
    """Build the :class:`SumComplex` of an ordered list of n polytopes in R^n."""
    polys = list(polys)
    if not polys:
        raise DimensionMismatch("need at least one polytope")
    n = len(polys)
    if any(p.ambient_dim != n for p in polys):
        raise DimensionMismatch(f"expected {n} polytopes in dimension {n}")
    all_dirs = [sub(v, p.vertices[0]) for p in polys for v in p.vertices[1:]]
    if _exact.rank(all_dirs) < n:
        raise DegenerateSum(f"Minkowski sum has dimension {_exact.rank(all_dirs)} < {n}")

    normals = _sum_facets(polys, n)
    offsets = [sum(min(dot(nu, v) for v in p.vertices) for p in polys) for nu in normals]

    candidates = sorted({tuple(map(sum, zip(*combo))) for combo in product(*(p.vertices for p in polys))})
    vertices = []
    for c in candidates:
        tight = [nu for nu, off in zip(normals, offsets) if dot(nu, c) == off]
        if len(tight) >= n and _exact.rank(tight) == n:
            vertices.append(c)
    total = LatticePolytope(tuple(vertices), n)
    facets = [
        Facet(nu, off, frozenset(v for v in vertices if dot(nu, v) == off))
        for nu, off in zip(normals, offsets)
    ]

    faces = []
    for s in _face_closure(vertices, facets):
        through = [f.normal for f in facets if s <= f.vertices]
        normal = tuple(map(sum, zip(*through))) if through else (0,) * n
        summands = tuple(support_face(p, normal) for p in polys)
        verts = tuple(sorted(s))
        faces.append(SumFace(verts, affine_rank(verts), normal, summands))
    faces.sort(key=lambda f: (f.dim, f.vertices))
    return SumComplex(polys, total, facets, faces)


def is_locked(face):
    return face.is_locked


class Genericity(NamedTuple):
    generic: bool
    witness: Optional[tuple]


def genericity(sc):
    """Check generic relative position on an already built sum.

    Only facets are inspected: a face inside a locked facet is locked, since
    its summands are faces of the facet's summands.
    """
    bad = [f.normal for f in sc.facets if not f.is_locked]
    if not bad:
        return Genericity(True, None)
    return Genericity(False, min(bad, key=_canonical_normal_key))


def is_generic_position(polys):
    """Return ``(generic, witness)`` for a list of n polytopes in R^n."""
    return genericity(minkowski_sum(polys))


def critical_vertices(sc):
    out = []
    for v in sc.faces_of_dim(0):
        proper = [g for g in sc.cofaces(v) if g.dim < sc.n]
        if all(g.is_locked for g in proper):
            out.append(v.point)
    return out
