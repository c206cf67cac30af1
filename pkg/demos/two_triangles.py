from fractions import Fraction

from gkresidue import LaurentPoly, SystemInstance, count_solutions, eliminant, solution_sum

x, y = LaurentPoly.variables(2)

# Two trinomials whose Newton polytopes are triangles in generic position
a10, a01, a22 = Fraction(1), Fraction(1), Fraction(1)
b00, b12, b21 = Fraction(1), Fraction(1), Fraction(2)
f1 = a10 * x + a01 * y + a22 * x**2 * y**2
f2 = b00 + b12 * x * y**2 + b21 * x**2 * y
sys_ = SystemInstance([f1, f2])

# The Minkowski sum is a hexagon; every vertex is critical
for a in sys_.vertices:
    print(a, "summands", sys_.decomposition(a), "c =", sys_.coeffs[a])

print("solutions:", count_solutions(sys_))

# Only two vertices carry nonzero residues of x^k
for k in (3, 6):
    res = sys_.residues(x**k)
    print(f"k={k}", {a: str(r) for a, r in res.items() if r})
    print("  sum of x^%d over solutions:" % k, solution_sum(x**k, sys_))

# Power sums feed Newton's identities
print(eliminant(sys_, 0).pretty("x"))
print(eliminant(sys_, 1).pretty("y"))
