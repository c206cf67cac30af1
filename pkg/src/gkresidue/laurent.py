"""Sparse Laurent polynomials over the rationals and their vertex expansions.

A :class:`LaurentPoly` maps exponent tuples (negative entries allowed) to
nonzero :class:`~fractions.Fraction` coefficients. On top of the arithmetic
this module provides Jacobians, the Laurent expansion of ``g / P`` at a
vertex of the Newton polytope of ``P`` and the residue at a vertex, i.e. the
coefficient of ``1/(t_1...t_n)`` in the expansion of ``q J / (f_1...f_n)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from numbers import Rational
from operator import mul
from types import MappingProxyType

from . import _exact
from ._exact import add as vadd
from ._exact import dot, sub
from .errors import DegenerateSum, DimensionMismatch, NotPointed, NotVertex

__all__ = [
    "LaurentPoly",
    "VertexExpansion",
    "expansion_coefficient",
    "jacobian",
    "laurent_expansion",
    "partial_derivative",
    "positive_functional",
    "residue_at_vertex",
    "vertex_functional",
]


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient {c!r} is not an exact rational")


class LaurentPoly:
    """Immutable sparse Laurent polynomial in ``nvars`` variables.

    >>> x, y = LaurentPoly.variables(2)
    >>> (x + y) * (x - y) == x**2 - y**2
    True
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms=(), nvars=None):
        if hasattr(terms, "items"):
            terms = terms.items()
        acc = {}
        for exp, c in terms:
            exp = tuple(int(e) for e in exp)
            if nvars is None:
                nvars = len(exp)
            elif len(exp) != nvars:
                raise DimensionMismatch(f"exponent {exp} has length != {nvars}")
            c = _as_fraction(c)
            acc[exp] = acc.get(exp, 0) + c
        if nvars is None:
            raise ValueError("nvars is required for an empty polynomial")
        self.nvars = nvars
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms, nvars):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exp, coeff=1):
        exp = tuple(exp)
        return cls({exp: coeff}, len(exp))

    @classmethod
    def variables(cls, nvars):
        return tuple(cls.variable(i, nvars) for i in range(nvars))

    @classmethod
    def variable(cls, i, nvars):
        exp = [0] * nvars
        exp[i] = 1
        return cls({tuple(exp): 1}, nvars)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def support(self):
        return list(self._terms)

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), Fraction(0))

    __getitem__ = coefficient

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise DimensionMismatch("polynomials in different numbers of variables")
            return other
        return LaurentPoly.constant(_as_fraction(other), self.nvars)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _as_fraction(c)
        if c == 0:
            return LaurentPoly._raw({}, self.nvars)
        return LaurentPoly._raw({e: c * v for e, v in self._terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c != 0}, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            if len(other) != 1:
                raise ValueError("can only divide by a monomial")
            (e, c), = other._terms.items()
            return self.shift(tuple(-x for x in e)).scale(1 / c)
        return self.scale(1 / _as_fraction(other))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self) != 1:
                raise ValueError("negative powers only of monomials")
            (e, c), = self._terms.items()
            return LaurentPoly._raw({tuple(k * x for x in e): c ** k}, self.nvars)
        result = LaurentPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exp):
        """Multiply by the monomial ``t^exp``."""
        return LaurentPoly._raw({vadd(e, exp): c for e, c in self._terms.items()}, self.nvars)

    def derivative(self, i):
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return LaurentPoly._raw(out, self.nvars)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = tuple(point[0])
        return self.evaluate(point)

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise DimensionMismatch("point has wrong length")
        point = [_as_fraction(p) for p in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for p, k in zip(point, e):
                if k:
                    term *= p ** k
            total += term
        return total

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == self._coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def to_text(self):
        """Canonical text form: lexicographic exponents, ``num/den`` coefficients."""
        if not self._terms:
            return "0"
        return " + ".join(
            f"{c.numerator}/{c.denominator}*t^{list(e)}" for e, c in sorted(self._terms.items())
        )

    def pretty(self, names=None):
        if names is None:
            names = ["x", "y", "z", "w"][: self.nvars] if self.nvars <= 4 else [f"t{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self.pretty()!r}, nvars={self.nvars})"

    __str__ = pretty


def partial_derivative(f, i):
    return f.derivative(i)


def product(polys):
    polys = list(polys)
    return reduce(mul, polys[1:], polys[0])


def jacobian(fs):
    """Determinant of the matrix of partial derivatives, by cofactor expansion."""
    fs = list(fs)
    n = len(fs)
    if any(f.nvars != n for f in fs):
        raise DimensionMismatch(f"need {n} polynomials in {n} variables")
    matrix = [[f.derivative(j) for j in range(n)] for f in fs]
    return _cofactor_det(matrix, n)


def _cofactor_det(m, n):
    if len(m) == 1:
        return m[0][0]
    total = LaurentPoly({}, n)
    for j, entry in enumerate(m[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = entry * _cofactor_det(minor, n)
        total = total + term if j % 2 == 0 else total - term
    return total


def positive_functional(points):
    """Integer ``xi`` with ``<xi, p> >= 1`` for every given point.

    >>> positive_functional([(1, -1), (0, 1)])
    (2, 1)
    """
    points = [tuple(p) for p in points]
    xi = _exact.strictly_positive_functional(points)
    if xi is None:
        raise NotPointed("the points do not lie in an open half-space")
    den = lcm(*(x.denominator for x in xi))
    return tuple(int(x * den) for x in xi)


@dataclass(frozen=True)
class VertexExpansion:
    """Truncated expansion of ``1/P`` at a vertex ``A`` of the Newton polytope.

    ``series`` equals ``P_A^{-1} t^{-A} (1 + h + h^2 + ...)`` on every exponent
    ``e`` with ``<functional, e + A> <= level``; beyond that it is incomplete.
    """

    vertex: tuple
    functional: tuple
    level: int
    series: LaurentPoly

    def level_of(self, exp):
        return dot(self.functional, vadd(exp, self.vertex))

    def coefficient(self, g, target):
        """Coefficient of ``t^target`` in the expansion of ``g/P``."""
        target = tuple(target)
        total = Fraction(0)
        for u, c in g.terms.items():
            e = sub(target, u)
            lv = self.level_of(e)
            if lv < 0:
                continue
            if lv > self.level:
                raise ValueError(f"expansion truncated at level {self.level}, need {lv}")
            total += c * self.series.coefficient(e)
        return total


def _vertex_cone(P, vertex):
    vertex = tuple(vertex)
    lam = P.coefficient(vertex)
    if lam == 0:
        raise NotVertex(f"{vertex} is not in the support of the denominator")
    h = {sub(e, vertex): -c / lam for e, c in P.terms.items() if e != vertex}
    return lam, h


def _checked_functional(h, vertex, functional):
    if functional is None:
        if not h:
            return (0,) * len(vertex)
        try:
            return positive_functional(h.keys())
        except NotPointed:
            raise NotVertex(f"{vertex} is not a vertex of the Newton polytope") from None
    functional = tuple(int(x) for x in functional)
    if any(dot(functional, p) < 1 for p in h):
        raise ValueError(f"functional {functional} is not positive on the cone at {vertex}")
    return functional


def vertex_functional(fs, vertex):
    """Integer functional minimised on the Newton polytope of ``prod(fs)`` only at ``vertex``.

    Taken from the face lattice of the Minkowski sum of the Newton polytopes
    when that sum is full-dimensional, otherwise found by linear programming.
    """
    from .geometry import minkowski_sum, newton_polytope

    vertex = tuple(vertex)
    try:
        sc = minkowski_sum([newton_polytope(f) for f in fs])
    except (DegenerateSum, DimensionMismatch):
        _, h = _vertex_cone(product(fs), vertex)
        return _checked_functional(h, vertex, None)
    try:
        return sc.vertex_face(vertex).normal
    except KeyError:
        raise NotVertex(f"{vertex} is not a vertex of the Minkowski sum") from None


def laurent_expansion(P, vertex, level, functional=None):
    """Expand ``1/P`` at ``vertex``, complete up to the given level.

    Powers of ``h`` are accumulated densely; any monomial above ``level``
    is discarded as soon as it appears, which is safe because every further
    factor of ``h`` raises the level by at least one.
    """
    vertex = tuple(vertex)
    lam, h = _vertex_cone(P, vertex)
    xi = _checked_functional(h, vertex, functional)
    hl = [(p, c, dot(xi, p)) for p, c in h.items()]
    zero = (0,) * P.nvars
    series = {zero: Fraction(1)}
    power = {zero: (Fraction(1), 0)}
    while power:
        nxt = {}
        for w, (cw, lw) in power.items():
            for p, cp, lp in hl:
                lv = lw + lp
                if lv > level:
                    continue
                e = vadd(w, p)
                prev = nxt.get(e)
                nxt[e] = (cw * cp + (prev[0] if prev else 0), lv)
        power = {e: v for e, v in nxt.items() if v[0] != 0}
        for e, (c, _) in power.items():
            series[e] = series.get(e, 0) + c
    neg = tuple(-a for a in vertex)
    inv = 1 / lam
    terms = {vadd(e, neg): c * inv for e, c in series.items() if c != 0}
    return VertexExpansion(vertex, xi, level, LaurentPoly._raw(terms, P.nvars))


def _needed_level(g, vertex, target, xi):
    levels = [dot(xi, vadd(sub(target, u), vertex)) for u in g.terms]
    return max(levels, default=-1)


def expansion_coefficient(g, fs, vertex, target, functional=None, extra_levels=0):
    """Exact coefficient of ``t^target`` in the expansion of ``g/(f_1...f_n)`` at ``vertex``.

    ``extra_levels`` expands further than needed; the answer must not change.
    """
    fs = list(fs)
    P = product(fs)
    vertex = tuple(vertex)
    lam, h = _vertex_cone(P, vertex)
    if functional is None:
        functional = vertex_functional(fs, vertex)
    xi = _checked_functional(h, vertex, functional)
    level = _needed_level(g, vertex, target, xi)
    if level < 0:
        return Fraction(0)
    exp = laurent_expansion(P, vertex, level + extra_levels, xi)
    return exp.coefficient(g, target)


def residue_at_vertex(q, fs, vertex, functional=None, extra_levels=0):
    """Coefficient of ``1/(t_1...t_n)`` in the expansion of ``q J / (f_1...f_n)`` at ``vertex``."""
    fs = list(fs)
    n = len(fs)
    g = q * jacobian(fs)
    return expansion_coefficient(g, fs, vertex, (-1,) * n, functional, extra_levels)
