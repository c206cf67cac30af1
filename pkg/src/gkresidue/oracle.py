"""Independent ground truth for checking the residue machinery.

Mixed volumes come from the polarization formula over exact volumes, which
never touches combinatorial coefficients. Known systems are triangular
systems whose solutions can be written down exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial

from . import _exact
from .errors import NotGeneric
from .geometry import LatticePolytope, is_generic_position, newton_polytope
from .laurent import LaurentPoly


def _triangulate(faces_by_set, face, dim):
    """Simplices (vertex tuples) of a pulling triangulation of a face."""
    if len(face) == dim + 1:
        return [tuple(face)]
    apex = min(face)
    out = []
    for sub_dim, sub in faces_by_set:
        if sub_dim == dim - 1 and set(sub) < set(face) and apex not in sub:
            for simplex in _triangulate(faces_by_set, sub, dim - 1):
                out.append((apex,) + simplex)
    return out


def volume(polytope):
    """Exact Euclidean volume; 0 for polytopes of lower dimension."""
    n = polytope.ambient_dim
    if polytope.dim < n:
        return Fraction(0)
    if n == 1:
        return Fraction(polytope.vertices[-1][0] - polytope.vertices[0][0])
    faces = polytope.faces
    total = Fraction(0)
    for simplex in _triangulate(faces, polytope.vertices, n):
        base = simplex[0]
        total += abs(_exact.det([_exact.sub(v, base) for v in simplex[1:]]))
    return total / factorial(n)


def _sum_polytope(polys):
    verts = polys[0].vertices
    for p in polys[1:]:
        # vertices of a sum lie among sums of vertices; prune after each step
        pts = {tuple(a + b for a, b in zip(u, v)) for u, v in product(verts, p.vertices)}
        verts = LatticePolytope.from_points(pts).vertices
    return LatticePolytope.from_points(verts)


def mixed_volume_oracle(polys):
    """Mixed volume by polarization: n! V = sum over nonempty S of (-1)^(n-|S|) vol(sum_S)."""
    polys = list(polys)
    n = len(polys)
    total = Fraction(0)
    for k in range(1, n + 1):
        for subset in combinations(polys, k):
            total += (-1) ** (n - k) * volume(_sum_polytope(list(subset)))
    return total / factorial(n)


@dataclass(frozen=True)
class KnownSystem:
    fs: tuple
    solutions: tuple  # (point, multiplicity) pairs

    def solution_sum(self, q):
        return sum((m * q.evaluate(p) for p, m in self.solutions), Fraction(0))

    def residuals(self):
        return [f.evaluate(p) for f in self.fs for p, _ in self.solutions]


def make_known_system(roots, monomials=(), shift=0):
    """Triangular system with exactly known solutions.

    ``roots`` is a list of ``(root, multiplicity)`` pairs (or bare roots) for
    ``f_1 = t_1^shift * prod (t_1 - r)^m``. Each entry of ``monomials`` is a
    pair ``(c, exponent)`` defining ``f_i = t_i - c t^exponent`` where the
    exponent only involves the earlier variables ``t_1 .. t_{i-1}``.
    """
    roots = [(Fraction(r), 1) if not isinstance(r, tuple) else (Fraction(r[0]), int(r[1])) for r in roots]
    if any(r == 0 for r, _ in roots):
        raise ValueError("roots must be nonzero")
    n = len(monomials) + 1
    t = LaurentPoly.variables(n)
    f1 = LaurentPoly.monomial((shift,) + (0,) * (n - 1))
    for r, m in roots:
        f1 = f1 * (t[0] - r) ** m
    fs = [f1]
    for i, (c, exp) in enumerate(monomials, start=1):
        exp = tuple(exp) + (0,) * (n - len(exp))
        if any(exp[j] for j in range(i, n)):
            raise ValueError("monomial may only use earlier variables")
        c = Fraction(c)
        if c == 0:
            raise ValueError("monomial coefficients must be nonzero")
        fs.append(t[i] - LaurentPoly.monomial(exp, c))
    solutions = []
    for r, m in roots:
        point = [r]
        for c, exp in monomials:
            exp = tuple(exp) + (0,) * (n - len(exp))
            val = Fraction(c)
            for coord, e in zip(point, exp):
                val *= coord ** e
            point.append(val)
        solutions.append((tuple(point), m))
    ok, witness = is_generic_position([newton_polytope(f) for f in fs])
    if not ok:
        raise NotGeneric("known system fails the genericity check", witness)
    return KnownSystem(tuple(fs), tuple(solutions))
