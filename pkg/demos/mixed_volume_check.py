import random
from math import factorial

from gkresidue import LaurentPoly, count_solutions, mixed_volume, mixed_volume_oracle, newton_polytope
from gkresidue.errors import DegenerateSum, NotGeneric

rng = random.Random(0)


def random_poly(n, terms=4, box=3):
    support = {tuple(rng.randint(0, box) for _ in range(n)) for _ in range(terms)}
    return LaurentPoly({e: rng.randint(1, 9) for e in support}, n)


# Mixed volume two ways: signed determinants at the vertices of the sum,
# and the polarization formula over plain volumes
shown = 0
while shown < 6:
    n = rng.choice([2, 3])
    fs = [random_poly(n) for _ in range(n)]
    polys = [newton_polytope(f) for f in fs]
    try:
        mv = mixed_volume(polys)
    except (NotGeneric, DegenerateSum):
        continue
    oracle = mixed_volume_oracle(polys)
    print(f"n={n}  MV={mv}  oracle={oracle}  solutions={count_solutions(fs)}  n!MV={factorial(n) * mv}")
    shown += 1
