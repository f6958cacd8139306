"""Holomorphic multivector fields and Poisson cohomology of smooth toric varieties.

Everything is exact: lattice points of the anticanonical polytope, ranks over
Q[i], and the per-weight chain complexes used to cross-check the closed-form
dimension formulas.
"""

from .exact import GaussianRational
from .fan import (Fan, del_pezzo6, dumps, hirzebruch, lattice_automorphisms, load, loads, product,
                  projective_space, star_subdivide, validate)
from .polytope import build_polytope, classify_weight, cone_vertex, is_fano, stratify
from .exterior import Bivector, Multivector, contract, wedge, weight_space_basis
from .cohomology import (demazure_roots, euler_check, multivector_dims, poisson_condition,
                         poisson_cohomology)
from .oracle import build_strand, strand_cohomology, verify

__version__ = "0.1.0"

__all__ = [
    "GaussianRational", "Fan", "del_pezzo6", "dumps", "lattice_automorphisms", "load", "loads", "hirzebruch", "product", "projective_space",
    "star_subdivide", "validate", "build_polytope", "classify_weight", "cone_vertex",
    "is_fano", "stratify", "Bivector", "Multivector", "contract", "wedge",
    "weight_space_basis", "demazure_roots", "euler_check", "multivector_dims",
    "poisson_condition", "poisson_cohomology", "build_strand", "strand_cohomology", "verify",
]
