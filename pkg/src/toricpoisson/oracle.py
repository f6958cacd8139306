"""Brute-force check of the Poisson cohomology formula, one weight at a time.

For each lattice point I the global-section complex restricts to a strand
``N_I^i -> N_I^(i+1) -> ... -> N_I^n`` whose differential wedges with the
contraction of I into the bivector.  The strand is built from explicit bases,
its differentials are written as exact matrices, and its cohomology is read
off by rank-nullity.  Nothing here uses the Poisson test or the binomial
formula, so agreement with :mod:`toricpoisson.cohomology` is a real check.

Scope: this verifies the cohomology of the complex of global multivector
fields.  That equals Poisson cohomology when higher sheaf cohomology of the
exterior powers of the tangent bundle vanishes (e.g. for Fano fans).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import exact
from .cohomology import poisson_cohomology
from .errors import DimensionMismatch, InconsistentSystem, InternalInconsistency
from .exterior import Bivector, WeightSpaceBasis, contract, wedge, weight_space_basis
from .polytope import WeightClassification, build_polytope, stratify

SCOPE = ("cohomology of the complex of global holomorphic multivector fields "
         "with differential [pi, -]")


@dataclass(frozen=True)
class Strand:
    weight: tuple
    level: int
    n: int
    bases: tuple          # WeightSpaceBasis for k = level..n
    differentials: tuple  # d_k as a list of rows, maps degree k to degree k+1, k = level..n-1

    def space_dims(self):
        return [0] * self.level + [b.dim for b in self.bases]

    def all_zero(self):
        return all(x == 0 for d in self.differentials for row in d for x in row)


@dataclass(frozen=True)
class StrandCohomology:
    weight: tuple
    dims: tuple  # k = 0..n


def _coordinates_in(basis: WeightSpaceBasis, target, n):
    cols = [b.coordinates() for b in basis.basis]
    m = exact.transpose(cols, cols=len(target.coordinates()))
    try:
        return exact.solve(m, target.coordinates())
    except InconsistentSystem:
        raise InternalInconsistency(
            f"wedge image at weight {basis.weight} leaves the degree-{basis.degree} weight space"
        ) from None


def build_strand(f, wc: WeightClassification, pi: Bivector) -> Strand:
    if pi.n != f.dim:
        raise DimensionMismatch("bivector and fan dimensions differ")
    n = f.dim
    v = contract(wc.point, pi)
    bases = tuple(weight_space_basis(f, wc, k) for k in range(wc.level, n + 1))
    diffs = []
    for src, dst in zip(bases, bases[1:]):
        cols = [_coordinates_in(dst, wedge(v, b), n) for b in src.basis]
        diffs.append(exact.transpose(cols, cols=dst.dim) if cols else [[] for _ in range(dst.dim)])
    for d0, d1 in zip(diffs, diffs[1:]):
        prod = exact.matmul(d1, d0)
        if any(x != 0 for row in prod for x in row):
            raise InternalInconsistency(f"d^2 != 0 on the strand of {wc.point}")
    return Strand(wc.point, wc.level, n, bases, tuple(diffs))


def _rank(d):
    return exact.rank(d) if d and d[0] else 0


def strand_cohomology(s: Strand) -> StrandCohomology:
    dims = [0] * (s.n + 1)
    ranks = [_rank(d) for d in s.differentials] + [0]
    for idx, b in enumerate(s.bases):
        k = s.level + idx
        incoming = ranks[idx - 1] if idx > 0 else 0
        dims[k] = b.dim - ranks[idx] - incoming
    return StrandCohomology(s.weight, tuple(dims))


@dataclass
class VerificationReport:
    agrees: bool
    per_weight: list  # dicts with I, strand_dims, condition
    oracle_dims: list
    formula_dims: list
    mismatches: list
    scope: str = SCOPE

    def to_json(self):
        return {"agrees": self.agrees, "per_weight": self.per_weight,
                "oracle_dims": list(self.oracle_dims), "formula_dims": list(self.formula_dims)}


def verify(f, pi: Bivector) -> VerificationReport:
    f.require_valid()
    strat = stratify(f, build_polytope(f))
    formula = poisson_cohomology(f, pi, strat)
    n = f.dim
    total = [0] * (n + 1)
    per_weight = []
    mismatches = []
    for wc in strat.all():
        h = strand_cohomology(build_strand(f, wc, pi)).dims
        total = [a + b for a, b in zip(total, h)]
        cond = formula.verdicts[wc.point]
        expected = [comb(n - wc.level, k - wc.level) if cond and k >= wc.level else 0
                    for k in range(n + 1)]
        if list(h) != expected:
            mismatches.append(wc.point)
        per_weight.append({"I": list(wc.point), "strand_dims": list(h), "condition": cond})
    agrees = total == formula.dims and not mismatches
    return VerificationReport(agrees, per_weight, total, list(formula.dims), mismatches)

