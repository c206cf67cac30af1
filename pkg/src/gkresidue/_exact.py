"""Small exact linear algebra and linear programming over the rationals.

Everything here works on Python ints and :class:`fractions.Fraction`;
matrices are lists of row sequences. Sizes are desk scale (dimension at most
four or five, a few hundred columns at most), so plain dense algorithms are
used throughout.
"""

from fractions import Fraction
from math import gcd, lcm


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def row_echelon(rows):
    """Return (echelon rows, pivot columns) of a rational matrix."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(row_echelon(rows)[1]) if rows else 0


def affine_rank(points):
    points = list(points)
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return rank([sub(p, p0) for p in points[1:]])


def nullspace(rows, ncols):
    """Basis of {x : rows @ x = 0} as lists of Fractions."""
    ech, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -ech[r][fc]
        basis.append(v)
    return basis


def primitive(v):
    """Scale a rational vector to the primitive integer vector on its ray."""
    v = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def det(rows):
    """Exact determinant (Fraction-valued Gaussian elimination)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in r] for r in rows]
    result = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        p = m[col][col]
        result *= p
        for i in range(col + 1, n):
            if m[i][col] != 0:
                f = m[i][col] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return result


def int_det(rows):
    """Determinant of a small integer matrix, returned as an int."""
    d = det(rows)
    assert d.denominator == 1
    return int(d)


def orthogonal_normal(vectors, n):
    """Primitive integer normal to n-1 linearly independent vectors in Z^n.

    Computed from signed maximal minors, so no division is involved.
    Returns the zero vector when the vectors are dependent.
    """
    vectors = [tuple(v) for v in vectors]
    if n == 1:
        return (1,)
    comps = []
    for j in range(n):
        minor = [[v[k] for k in range(n) if k != j] for v in vectors]
        comps.append((-1) ** j * int_det(minor))
    return primitive(comps)


# -- linear programming ---------------------------------------------------


def _pivot(tab, basis, r, c):
    inv = 1 / tab[r][c]
    tab[r] = [x * inv for x in tab[r]]
    pr = tab[r]
    for i, row in enumerate(tab):
        if i != r:
            f = row[c]
            if f != 0:
                tab[i] = [a - f * b for a, b in zip(row, pr)]
    basis[r] = c


def _run_simplex(tab, basis, allowed):
    """Minimise the last-row objective; Bland's rule. Returns False if unbounded."""
    m = len(tab) - 1
    obj = tab[m]
    while True:
        obj = tab[m]
        enter = next((j for j in allowed if obj[j] < 0), None)
        if enter is None:
            return True
        best = None
        leave = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return False
        _pivot(tab, basis, leave, enter)


def linprog(c, a_eq, b_eq):
    """Solve ``min c.x  s.t.  a_eq x = b_eq, x >= 0`` exactly.

    Returns ``(status, x)`` with status one of ``"optimal"``,
    ``"infeasible"``, ``"unbounded"``; ``x`` is a list of Fractions for the
    optimal case and ``None`` otherwise. Passing ``c=None`` only tests
    feasibility.
    """
    m = len(a_eq)
    nvar = len(a_eq[0]) if m else (len(c) if c is not None else 0)
    rows = []
    for a, b in zip(a_eq, b_eq):
        a = [Fraction(x) for x in a]
        b = Fraction(b)
        if b < 0:
            a = [-x for x in a]
            b = -b
        rows.append(a + [b])
    # phase one: artificial columns nvar .. nvar+m-1
    tab = []
    for i, r in enumerate(rows):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab.append(r[:-1] + art + [r[-1]])
    obj = [Fraction(0)] * (nvar + m + 1)
    for r in tab:
        for j in range(nvar):
            obj[j] -= r[j]
        obj[-1] -= r[-1]
    tab.append(obj)
    basis = list(range(nvar, nvar + m))
    _run_simplex(tab, basis, range(nvar))
    if tab[m][-1] != 0:
        return "infeasible", None
    # drive remaining artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(basis):
        if basis[i] >= nvar:
            col = next((j for j in range(nvar) if tab[i][j] != 0), None)
            if col is None:
                del tab[i]
                del basis[i]
                continue
            _pivot(tab, basis, i, col)
        i += 1
    m = len(basis)
    tab = [r[:nvar] + [r[-1]] for r in tab]
    if c is not None:
        obj = [Fraction(x) for x in c] + [Fraction(0)]
        for i, bcol in enumerate(basis):
            f = obj[bcol]
            if f != 0:
                obj = [a - f * b for a, b in zip(obj, tab[i])]
        tab[m] = obj
        if not _run_simplex(tab, basis, range(nvar)):
            return "unbounded", None
    x = [Fraction(0)] * nvar
    for i, bcol in enumerate(basis):
        x[bcol] = tab[i][-1]
    return "optimal", x


def in_convex_hull(point, points):
    """Exact test of ``point in conv(points)``."""
    points = list(points)
    if not points:
        return False
    n = len(point)
    a_eq = [[p[k] for p in points] for k in range(n)]
    a_eq.append([1] * len(points))
    b_eq = list(point) + [1]
    status, _ = linprog(None, a_eq, b_eq)
    return status == "optimal"


def strictly_positive_functional(vectors):
    """Rational xi with xi.w >= 1 for every w, minimising |xi|_1; None if none exists."""
    vectors = [tuple(w) for w in vectors]
    if not vectors:
        return None
    n = len(vectors[0])
    m = len(vectors)
    # xi = p - q with p, q >= 0; W xi - s = 1 with s >= 0
    a_eq = []
    for i, w in enumerate(vectors):
        slack = [0] * m
        slack[i] = -1
        a_eq.append(list(w) + [-x for x in w] + slack)
    cost = [1] * (2 * n) + [0] * m
    status, x = linprog(cost, a_eq, [1] * m)
    if status != "optimal":
        return None
    return [x[k] - x[n + k] for k in range(n)]
