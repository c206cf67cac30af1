"""Shared test helpers: instance generators and independent oracles."""

import random
from fractions import Fraction

from gkresidue import LaurentPoly
from gkresidue.errors import DegenerateSum, NotGeneric
from gkresidue.geometry import is_generic_position, newton_polytope

NONZERO = [Fraction(p, q) for p in (-3, -2, -1, 1, 2, 3) for q in (1, 2, 3)]


def two_triangle_system(a10, a01, a22, b00, b12, b21):
    x, y = LaurentPoly.variables(2)
    f1 = a10 * x + a01 * y + a22 * x**2 * y**2
    f2 = b00 + b12 * x * y**2 + b21 * x**2 * y
    return [f1, f2]


def random_nonzero(rng, lo=-9, hi=9, max_den=5):
    while True:
        c = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if c:
            return c


def recoefficient(f, rng):
    return LaurentPoly({e: random_nonzero(rng) for e in f.support()}, f.nvars)


def random_support(rng, n, size, box=3):
    pts = set()
    while len(pts) < size:
        pts.add(tuple(rng.randint(0, box) for _ in range(n)))
    return sorted(pts)


def random_generic_system(rng, n, max_terms=5, box=3, min_terms=2):
    """Random system whose Newton polytopes are in generic position, full rank."""
    while True:
        fs = [
            LaurentPoly({p: random_nonzero(rng) for p in random_support(rng, n, rng.randint(min_terms, max_terms), box)}, n)
            for _ in range(n)
        ]
        try:
            ok, _ = is_generic_position([newton_polytope(f) for f in fs])
        except DegenerateSum:
            continue
        if ok and all(newton_polytope(f).dim >= 1 for f in fs):
            return fs


def generic_corpus(seed, count, dims=(2, 3), max_terms=5):
    rng = random.Random(seed)
    return [random_generic_system(rng, dims[k % len(dims)], max_terms) for k in range(count)]


def elementary_to_power(sigma):
    """Power sums from elementary symmetric functions (Newton's identities forward)."""
    s = []
    e = [Fraction(1)] + [Fraction(x) for x in sigma]
    for k in range(1, len(sigma) + 1):
        acc = (-1) ** (k - 1) * k * e[k]
        for j in range(1, k):
            acc += (-1) ** (j - 1) * e[j] * s[k - j - 1]
        s.append(acc)
    return s


# -- univariate classical residues by power series division ---------------


def _series_inverse(coeffs, order):
    """First ``order`` coefficients of 1/F for a power series F with F[0] != 0."""
    inv = [Fraction(1) / coeffs[0]]
    for k in range(1, order):
        acc = sum(coeffs[j] * inv[k - j] for j in range(1, min(k, len(coeffs) - 1) + 1))
        inv.append(-acc / coeffs[0])
    return inv


def _coeff_dict(p):
    return {e[0]: c for e, c in p.terms.items()}


def classical_residue_zero(q, f):
    """Coefficient of 1/t in the expansion of q f'/f at t = 0."""
    num = _coeff_dict(q * f.derivative(0))
    fd = _coeff_dict(f)
    a = min(fd)
    F = [fd.get(a + k, Fraction(0)) for k in range(max(fd) - a + 1)]
    # q f'/f = t^-a * num / F ; want exponent -1, i.e. num exponent u and series index -1 + a - u
    need = max([a - 1 - u for u in num] + [0]) + 1
    inv = _series_inverse(F, need)
    total = Fraction(0)
    for u, c in num.items():
        k = a - 1 - u
        if 0 <= k < len(inv):
            total += c * inv[k]
    return total


def classical_residue_infinity_coefficient(q, f):
    """Coefficient of 1/t in the expansion of q f'/f at t = infinity."""
    num = _coeff_dict(q * f.derivative(0))
    fd = _coeff_dict(f)
    b = max(fd)
    # f = t^b G(1/t), G[k] = coeff of t^(b-k)
    G = [fd.get(b - k, Fraction(0)) for k in range(b - min(fd) + 1)]
    # num/f = t^-b sum_u c_u t^u sum_k inv_k t^-k; exponent u - b - k = -1
    need = max([u - b + 1 for u in num] + [0]) + 1
    inv = _series_inverse(G, need)
    total = Fraction(0)
    for u, c in num.items():
        k = u - b + 1
        if 0 <= k < len(inv):
            total += c * inv[k]
    return total


def random_univariate_case(rng):
    """(q, f, roots) with f = c t^m prod (t - a)^mu and q a random Laurent polynomial."""
    (t,) = LaurentPoly.variables(1)
    roots = []
    for _ in range(rng.randint(1, 3)):
        a = random_nonzero(rng, -5, 5, 3)
        if a not in [r for r, _ in roots]:
            roots.append((a, rng.randint(1, 2)))
    f = LaurentPoly.monomial((rng.randint(-3, 3),), random_nonzero(rng))
    for a, mu in roots:
        f = f * (t - a) ** mu
    q = LaurentPoly({(rng.randint(-3, 4),): random_nonzero(rng) for _ in range(rng.randint(1, 4))}, 1)
    return q, f, roots
