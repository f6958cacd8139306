# Poisson cohomology of toric Poisson structures.
#
# A torus-invariant Poisson structure is a constant bivector
# pi = sum a_ij e_i ^ e_j.  A weight I survives in cohomology exactly when the
# contraction of I into pi lies in the span of the rays active at I.

from fractions import Fraction

import toricpoisson as tp
from toricpoisson.exact import GaussianRational

p2 = tp.projective_space(2)
pi = tp.Bivector(2, {(0, 1): 1})            # e1 ^ e2

# Contraction at a few weights, and the verdict of the Poisson test.
for point in [(0, 0), (0, -1), (-1, -1), (1, 0)]:
    wc = tp.classify_weight(p2, point)
    print(point, "level", wc.level, "contraction", tp.contract(point, pi),
          "passes:", tp.poisson_condition(p2, wc, pi))

rep = tp.poisson_cohomology(p2, pi)
print("surviving points per level:", rep.strata_pi)
print("dim H^k_pi:", rep.dims, " fano:", rep.fano)

# The zero bivector recovers the multivector-field dimensions.
print("pi = 0:", tp.poisson_cohomology(p2, tp.Bivector.zero(2)).dims)

# Complex coefficients live in Q[i]; scaling pi changes nothing.
pi_c = pi.scale(GaussianRational(Fraction(1, 2), 3))
print("scaled:", tp.poisson_cohomology(p2, pi_c).dims)

# On CP^3 the bivector e1 ^ e2 is degenerate, so more weights survive.
p3 = tp.projective_space(3)
print("CP^3, e1^e2:", tp.poisson_cohomology(p3, tp.Bivector(3, {(0, 1): 1})).dims)
print("CP^3, generic:", tp.poisson_cohomology(
    p3, tp.Bivector(3, {(0, 1): 1, (0, 2): 2, (1, 2): GaussianRational(0, 5)})).dims)

# F_2 is not Fano: the report is flagged conditional because the vanishing of
# higher cohomology is not certified there.
rep = tp.poisson_cohomology(tp.hirzebruch(2), pi)
print("F2:", rep.dims, "conditional:", rep.conditional)
