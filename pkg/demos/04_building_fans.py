# Building and validating fans.

import json

import toricpoisson as tp
from toricpoisson import fan as fanmod

# Blowing up CP^2 at a torus-fixed point gives F_1 (up to a change of basis).
p2 = tp.projective_space(2)
bl = tp.star_subdivide(p2, (0, 1))
print("blowup rays:", bl.rays, "valid:", bl.validate().ok)
print("levels", tp.stratify(bl).counts, "vs F1", tp.stratify(tp.hirzebruch(1)).counts)

# Products of fans give products of varieties.
prod = tp.product(tp.projective_space(1), p2)
print("CP1 x CP2:", prod.dim, len(prod.rays), "rays", len(prod.max_cones), "cones")
print("dims:", tp.multivector_dims(prod).dims)

# Broken input: remove a cone and the ridge counts reveal the boundary.
broken = tp.Fan(2, p2.rays, p2.max_cones[:2])
for issue in broken.validate().issues:
    print("issue:", issue)

# Non-primitive rays are reported by validation; normalized() repairs them.
raw = fanmod.Fan.from_json({"rays": [[2, 0], [0, 1], [-1, -1]],
                            "max_cones": [[0, 1], [1, 2], [0, 2]]})
print([str(i) for i in raw.validate().issues], "->", raw.normalized().validate().ok)

# JSON round trip.
text = fanmod.dumps(tp.del_pezzo6())
print(text)
print(fanmod.loads(text) == tp.del_pezzo6())
print(len(fanmod.lattice_automorphisms(tp.del_pezzo6())), "lattice automorphisms of the hexagon fan")
