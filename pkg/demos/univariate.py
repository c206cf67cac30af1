from fractions import Fraction

from gkresidue import LaurentPoly, coefficient_table, minkowski_sum, newton_polytope, residue_at_vertex

(t,) = LaurentPoly.variables(1)

# One equation: the Newton polytope is a segment [A, B] and the two
# endpoint residues are the classical residues at zero and infinity
f = 3 * t**-1 * (t - 2) ** 2 * (t + Fraction(1, 2))
q = t**2 + t**-1
sc = minkowski_sum([newton_polytope(f)])
table = coefficient_table(sc)
A, B = sc.vertices
rA, rB = residue_at_vertex(q, [f], A), residue_at_vertex(q, [f], B)
print("endpoints", A, B, "coefficients", table[A], table[B])
print("residues", rA, rB)
print("-(c_A res_A + c_B res_B) =", -(table[A] * rA + table[B] * rB))
print("2 q(2) + q(-1/2) =", 2 * q.evaluate((2,)) + q.evaluate((Fraction(-1, 2),)))
