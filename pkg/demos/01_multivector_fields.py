# Holomorphic multivector fields on smooth toric varieties.
#
# The lattice points of the anticanonical polytope index the torus weights of
# multivector fields.  A point of level i (i independent rays pairing to -1
# with it) carries C(n - i, k - i) independent k-vector fields.

import toricpoisson as tp

# CP^2: the polytope is the triangle with vertices (-1,-1), (2,-1), (-1,2).
p2 = tp.projective_space(2)
poly = tp.build_polytope(p2)
print("vertices of P:", [tuple(int(x) for x in v) for v in poly.vertices])
print("lattice points:", len(poly.lattice_points))

# Grouping points by level gives the interior point, 6 edge points, 3 vertices.
strat = tp.stratify(p2)
print("points per level:", strat.counts)

# Dimensions of H^0(wedge^k T) for k = 0, 1, 2.  The k = 1 value is the
# dimension of PGL(3); the k = 2 value counts all lattice points.
print("dims:", tp.multivector_dims(p2).dims)

# The weight decomposition in degree 1: each weight with its multiplicity.
for point, d in tp.multivector_dims(p2).decomposition(1):
    print("  weight", point, "dim", d)

# Demazure roots are the nonzero points of level <= 1: the roots of sl_3.
print("roots:", tp.demazure_roots(p2))

# Same thing for a few other surfaces and for CP^3.
for f in [tp.hirzebruch(0), tp.hirzebruch(1), tp.hirzebruch(2), tp.del_pezzo6(),
          tp.projective_space(3)]:
    rep = tp.multivector_dims(f)
    print(f"{f.name:>4}: levels {rep.strata}  dims {rep.dims}  roots {len(tp.demazure_roots(f))}")
