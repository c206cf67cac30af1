import random
from fractions import Fraction
from itertools import permutations

import pytest

from gkresidue.coefficients import (
    admissible_flags,
    coefficient_table,
    combinatorial_coefficient,
    flag_sign,
)
from gkresidue.errors import NoFlags, NotCritical, NotGeneric
from gkresidue.geometry import LatticePolytope, minkowski_sum, newton_polytope
from gkresidue._exact import det, sub

from support import random_generic_system

P = LatticePolytope.from_points
TRI1 = P([(1, 0), (0, 1), (2, 2)])
TRI2 = P([(0, 0), (1, 2), (2, 1)])
SQUARE = P([(0, 0), (1, 0), (0, 1), (1, 1)])
DIAG = P([(0, 0), (1, 1)])

TRIANGLE_SIGNS = {(0, 1): 1, (1, 3): -1, (3, 4): 1, (4, 3): -1, (3, 1): 1, (1, 0): -1}


def perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


class TestFlags:
    def test_segment(self):
        sc = minkowski_sum([P([(0,), (2,)])])
        flags = admissible_flags(sc, (0,))
        assert len(flags) == 1 and flags[0].sign == 1
        assert [f.vertices for f in flags[0].chain] == [((0,),), ((0,), (2,))]

    def test_hexagon_vertices(self):
        sc = minkowski_sum([TRI1, TRI2])
        assert sum(f.sign for f in admissible_flags(sc, (1, 0))) == -1
        assert sum(f.sign for f in admissible_flags(sc, (0, 1))) == 1

    def test_flag_admissibility(self):
        sc = minkowski_sum([TRI1, TRI2])
        for a in sc.vertices:
            for flag in admissible_flags(sc, a):
                for i, face in enumerate(flag.chain):
                    assert face.dim == i
                    assert all(d >= 1 for d in face.summand_dims[:i])
                    assert all(d == 0 for d in face.summand_dims[i:])

    def test_not_critical(self):
        sc = minkowski_sum([SQUARE, SQUARE])
        with pytest.raises(NotCritical):
            admissible_flags(sc, (0, 0))


class TestFlagSign:
    def _chain(self, sc, a, edge):
        return [sc.vertex_face(a), sc.face(edge), sc.whole]

    def test_upper_triangular(self):
        sc = minkowski_sum([SQUARE, DIAG])
        # at (0,0): edge to (1,0) then the polygon above it
        chain = self._chain(sc, (0, 0), [(0, 0), (1, 0)])
        assert flag_sign(chain) == 1
        chain = self._chain(sc, (0, 0), [(0, 0), (0, 1)])
        assert flag_sign(chain) == -1

    def test_interval(self):
        sc = minkowski_sum([P([(0,), (2,)])])
        assert flag_sign([sc.vertex_face((0,)), sc.whole]) == 1
        assert flag_sign([sc.vertex_face((2,)), sc.whole]) == -1

    def test_choice_of_interior_points(self):
        # any relative interior witness gives the barycentre's orientation
        rng = random.Random(1)
        for _ in range(25):
            fs = random_generic_system(rng, rng.choice([2, 3]))
            sc = minkowski_sum([newton_polytope(f) for f in fs])
            for a in sc.vertices:
                for flag in admissible_flags(sc, a):
                    frame = []
                    for face in flag.chain[1:]:
                        w = [Fraction(rng.randint(1, 9)) for _ in face.vertices]
                        tot = sum(w)
                        pt = tuple(sum(wi * v[k] for wi, v in zip(w, face.vertices)) / tot for k in range(sc.n))
                        frame.append(sub(pt, a))
                    d = det(frame)
                    assert d != 0 and (1 if d > 0 else -1) == flag.sign


class TestCoefficients:
    def test_two_triangle_table(self):
        table = coefficient_table(minkowski_sum([TRI1, TRI2]))
        assert dict(table.items()) == TRIANGLE_SIGNS

    def test_reversed_order(self):
        table = coefficient_table(minkowski_sum([TRI2, TRI1]))
        assert dict(table.items()) == {a: -c for a, c in TRIANGLE_SIGNS.items()}

    def test_segment(self):
        table = coefficient_table(minkowski_sum([P([(-1,), (4,)])]))
        assert table[(-1,)] == 1 and table[(4,)] == -1

    def test_same_polygon_sides_give_zero(self):
        sc = minkowski_sum([SQUARE, DIAG])
        table = coefficient_table(sc)
        # at (2,2) and (0,0) both adjacent edges come from the square
        assert table[(2, 2)] == 0 and table[(0, 0)] == 0
        assert table[(1, 0)] == -1 and table[(0, 1)] == 1

    def test_not_generic(self):
        with pytest.raises(NotGeneric) as info:
            coefficient_table(minkowski_sum([SQUARE, SQUARE]))
        assert info.value.witness is not None

    def test_point_summand(self):
        sc = minkowski_sum([P([(1, 1)]), SQUARE])
        with pytest.raises(NoFlags):
            coefficient_table(sc)
        with pytest.raises(NoFlags):
            combinatorial_coefficient(sc, (1, 1))

    def test_order_alternation(self):
        rng = random.Random(12)
        for _ in range(10):
            n = rng.choice([2, 3])
            polys = [newton_polytope(f) for f in random_generic_system(rng, n)]
            base = coefficient_table(minkowski_sum(polys))
            for perm in permutations(range(n)):
                table = coefficient_table(minkowski_sum([polys[i] for i in perm]))
                s = perm_sign(perm)
                assert dict(table.items()) == {a: s * c for a, c in base.items()}
