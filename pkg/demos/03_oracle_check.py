# Cross-checking the closed formula against explicit chain complexes.
#
# For each weight the complex of global multivector fields restricts to a
# strand N_I^i -> ... -> N_I^n with differential "wedge with the contraction".
# The oracle builds bases, writes the differentials as exact matrices and
# takes ranks.

import random
from fractions import Fraction

import toricpoisson as tp
from toricpoisson.exact import GaussianRational

p2 = tp.projective_space(2)
pi = tp.Bivector(2, {(0, 1): 1})

# One strand that survives and one that is exact.
for point in [(0, 0), (0, -1)]:
    wc = tp.classify_weight(p2, point)
    s = tp.build_strand(p2, wc, pi)
    print(point, "space dims", s.space_dims(), "cohomology", tp.strand_cohomology(s).dims)

print(tp.verify(p2, pi).to_json()["oracle_dims"])

# Random Gaussian-rational bivectors on several fans.
rng = random.Random(1)


def random_bivector(n):
    def q():
        return Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return tp.Bivector(n, {(i, j): GaussianRational(q(), q())
                           for i in range(n) for j in range(i + 1, n)})


for f in [tp.projective_space(3), tp.hirzebruch(1), tp.del_pezzo6()]:
    for _ in range(3):
        rep = tp.verify(f, random_bivector(f.dim))
        print(f"{f.name:>4}: oracle {rep.oracle_dims} formula {rep.formula_dims} agrees {rep.agrees}")
