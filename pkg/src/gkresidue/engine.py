"""Sums over solutions, solution counts, mixed volume and eliminants.

For n Laurent polynomials whose Newton polytopes are in generic relative
position, the sum of ``q`` over the common zeros in the torus (with
multiplicity) is ``(-1)^n sum_A c_A res_A(q)`` over the vertices ``A`` of
the Minkowski sum. Everything else here is a consequence: ``q = 1`` counts
solutions, ``q = t_i^k`` gives power sums of the ``i``-th coordinates, and
Newton's identities turn those into a monic univariate eliminant.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import _exact
from .coefficients import coefficient_table
from .errors import ConsistencyError, DimensionMismatch, NotGeneric
from .geometry import genericity, minkowski_sum, newton_polytope
from .laurent import LaurentPoly, jacobian, laurent_expansion, product

__all__ = [
    "EliminantPoly",
    "SystemInstance",
    "count_solutions",
    "eliminant",
    "mixed_volume",
    "newton_to_elementary",
    "power_sums",
    "solution_sum",
]


class SystemInstance:
    """A square Laurent system together with its Minkowski sum data.

    Construction checks generic relative position and computes the
    coefficient table. Expansions of ``1/(f_1...f_n)`` at each vertex are
    memoised per instance and only ever grow, so repeated queries are cheap
    and results do not depend on query order.
    """

    def __init__(self, fs):
        fs = list(fs)
        n = len(fs)
        if n == 0 or any(f.nvars != n for f in fs):
            raise DimensionMismatch(f"need n polynomials in n variables, got {n}")
        self.fs = tuple(fs)
        self.n = n
        self.polytopes = tuple(newton_polytope(f) for f in fs)
        self.sc = minkowski_sum(self.polytopes)
        ok, witness = genericity(self.sc)
        if not ok:
            raise NotGeneric(f"not in generic relative position; witness {witness}", witness)
        self.coeffs = coefficient_table(self.sc)
        self.jacobian = jacobian(fs)
        self.denominator = product(fs)
        self._expansions = {}

    @property
    def vertices(self):
        return self.sc.vertices

    def decomposition(self, vertex):
        return self.sc.decomposition(vertex)

    def functional(self, vertex):
        # interior normal of the vertex: strictly positive on supp(P) - A
        return self.sc.vertex_face(vertex).normal

    def expansion(self, vertex, level):
        vertex = tuple(vertex)
        cached = self._expansions.get(vertex)
        if cached is None or cached.level < level:
            cached = laurent_expansion(self.denominator, vertex, level, self.functional(vertex))
            self._expansions[vertex] = cached
        return cached

    def residue(self, q, vertex, extra_levels=0):
        """Residue of ``q df_1/f_1 ^ ... ^ df_n/f_n`` at a vertex of the sum."""
        vertex = tuple(vertex)
        g = _as_poly(q, self.n) * self.jacobian
        target = (-1,) * self.n
        xi = self.functional(vertex)
        levels = [_exact.dot(xi, _exact.add(_exact.sub(target, u), vertex)) for u in g.terms]
        level = max(levels, default=-1)
        if level < 0:
            return Fraction(0)
        return self.expansion(vertex, level + extra_levels).coefficient(g, target)

    def residues(self, q):
        return {a: self.residue(q, a) for a in self.vertices}


def _as_poly(q, n):
    if isinstance(q, LaurentPoly):
        if q.nvars != n:
            raise DimensionMismatch("query polynomial has the wrong number of variables")
        return q
    return LaurentPoly.constant(q, n)


def _instance(sys):
    return sys if isinstance(sys, SystemInstance) else SystemInstance(sys)


def solution_sum(q, sys):
    """Sum of ``q`` over the solutions of the system, with multiplicity."""
    sys = _instance(sys)
    total = sum(sys.coeffs[a] * sys.residue(q, a) for a in sys.vertices)
    return Fraction((-1) ** sys.n * total)


def count_solutions(sys):
    value = solution_sum(1, sys)
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"solution count {value} is not a non-negative integer")
    return int(value)


def signed_determinant_sum(sc, coeffs):
    """``(-1)^n sum_A c_A det(A_1, ..., A_n)`` over the vertices of the sum."""
    total = sum(coeffs[a] * _exact.det(sc.decomposition(a)) for a in sc.vertices)
    return Fraction((-1) ** sc.n * total)


def mixed_volume(polys):
    """Mixed volume from combinatorial coefficients and summand determinants."""
    polys = list(polys)
    sc = minkowski_sum(polys)
    coeffs = coefficient_table(sc)
    value = signed_determinant_sum(sc, coeffs) / factorial(sc.n)
    if value < 0:
        raise ConsistencyError(f"negative mixed volume {value}")
    return value


def power_sums(sys, i, N=None):
    """``[s_1, ..., s_N]`` where ``s_k`` sums ``t_i^k`` over the solutions."""
    sys = _instance(sys)
    if N is None:
        N = count_solutions(sys)
    ti = LaurentPoly.variable(i, sys.n)
    return [solution_sum(ti ** k, sys) for k in range(1, N + 1)]


def newton_to_elementary(s):
    """Elementary symmetric functions from power sums via Newton's identities.

    >>> newton_to_elementary([3, 5])
    [Fraction(3, 1), Fraction(2, 1)]
    """
    sigma = [Fraction(1)]
    for k in range(1, len(s) + 1):
        acc = sum((-1) ** (j - 1) * sigma[k - j] * Fraction(s[j - 1]) for j in range(1, k + 1))
        sigma.append(acc / k)
    return sigma[1:]


@dataclass(frozen=True)
class EliminantPoly:
    """Monic univariate polynomial ``t^N - s1 t^(N-1) + s2 t^(N-2) - ...``.

    ``coefficients`` runs from the leading term down to the constant term.
    """

    variable: int
    degree: int
    coefficients: tuple

    def as_laurent(self, nvars=1, var=0):
        t = LaurentPoly.variable(var, nvars)
        out = LaurentPoly({}, nvars)
        for k, c in enumerate(self.coefficients):
            out = out + (t ** (self.degree - k)) * c
        return out

    def __call__(self, value):
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * value + c
        return acc

    def pretty(self, name="t"):
        return self.as_laurent().pretty([name])


def eliminant(sys, i):
    """Monic polynomial whose roots are the ``i``-th coordinates of the solutions."""
    sys = _instance(sys)
    if not 0 <= i < sys.n:
        raise IndexError(f"variable index {i} out of range")
    N = count_solutions(sys)
    if N == 0:
        warnings.warn("system has no solutions in the torus; eliminant is the constant 1")
        return EliminantPoly(i, 0, (Fraction(1),))
    sigma = newton_to_elementary(power_sums(sys, i, N))
    coeffs = (Fraction(1),) + tuple((-1) ** k * c for k, c in enumerate(sigma, start=1))
    if coeffs[-1] == 0:
        raise ConsistencyError("eliminant has a zero root, impossible for torus solutions")
    return EliminantPoly(i, N, coeffs)
