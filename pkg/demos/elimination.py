from gkresidue import LaurentPoly, count_solutions, eliminant, make_known_system, solution_sum

# A triangular system with a double root: x = 2 twice, x = 3 once,
# y = 5x and z = -y/x^2
ks = make_known_system([(2, 2), 3], [(5, (1,)), (-1, (-2, 1))])
for f in ks.fs:
    print(f.pretty(["x", "y", "z"]))
print("solutions with multiplicity:", count_solutions(list(ks.fs)))

x, y, z = LaurentPoly.variables(3)
q = x * y + z**2
print("sum of q:", solution_sum(q, list(ks.fs)), "direct:", ks.solution_sum(q))

for i, name in enumerate("xyz"):
    print(eliminant(list(ks.fs), i).pretty(name))
