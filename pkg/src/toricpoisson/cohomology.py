"""Closed-form dimensions of multivector fields and of toric Poisson cohomology.

Every lattice point I of level i contributes ``C(n - i, k - i)`` to the
degree-k count of holomorphic k-vector fields.  For Poisson cohomology only
the points passing the Poisson test contribute, with the same binomials:
a point passes when the contraction of the weight into the bivector lies in
the span of its active rays.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import exact
from .errors import DimensionMismatch
from .exterior import Bivector, contract
from .polytope import Stratification, WeightClassification, build_polytope, is_fano, stratify


def binomial_dims(counts, n):
    """``[sum_{i<=k} C(n-i, k-i) * counts[i] for k in 0..n]``."""
    return [sum(comb(n - i, k - i) * counts[i] for i in range(k + 1)) for k in range(n + 1)]


@dataclass
class MultivectorReport:
    n: int
    dims: list
    strata: list
    stratification: Stratification

    def decomposition(self, k):
        """Pairs ``(I, dim V_I^k)`` over the points of level at most k."""
        return [(wc.point, comb(self.n - wc.level, k - wc.level))
                for wc in sorted(self.stratification.up_to(k), key=lambda wc: wc.point)]

    def to_json(self):
        return {"dims_h0_wedge": list(self.dims), "strata": list(self.strata)}


def multivector_dims(f, strat: Stratification | None = None) -> MultivectorReport:
    strat = strat or stratify(f)
    counts = strat.counts
    return MultivectorReport(f.dim, binomial_dims(counts, f.dim), counts, strat)


def demazure_roots(f, strat: Stratification | None = None):
    """Nonzero lattice points of level at most one, sorted."""
    strat = strat or stratify(f)
    return sorted(wc.point for wc in strat.up_to(1) if any(wc.point))


def poisson_condition(f, wc: WeightClassification, pi: Bivector) -> bool:
    """Whether the contraction at ``wc.point`` lies in the span of its active rays."""
    v = contract(wc.point, pi)
    if wc.level == 0:
        return v.is_zero()
    rows = [list(f.rays[t]) for t in wc.normal_basis] + [v.coordinates()]
    return exact.rank(rows) == wc.level


@dataclass
class PoissonReport:
    n: int
    pi: Bivector
    multivector: MultivectorReport
    verdicts: dict  # point -> bool
    strata_pi: list
    dims: list
    fano: bool
    conditional: bool

    @property
    def failed_weights(self):
        return sorted(p for p, ok in self.verdicts.items() if not ok)

    def dim(self, k):
        """Dimension in any degree k >= 0; zero above n."""
        return self.dims[k] if k <= self.n else 0

    def to_json(self):
        out = self.multivector.to_json()
        out["poisson"] = {"strata_pi": list(self.strata_pi), "dims": list(self.dims),
                          "fano": self.fano, "conditional": self.conditional,
                          "failed_weights": [list(p) for p in self.failed_weights]}
        return out


def poisson_cohomology(f, pi: Bivector, strat: Stratification | None = None) -> PoissonReport:
    """Poisson cohomology dimensions; ``conditional`` is set when the fan is not Fano.

    For non-Fano fans the numbers are the cohomology of the complex of global
    multivector fields, which agrees with Poisson cohomology only when the
    higher cohomology of every exterior power of the tangent bundle vanishes.
    """
    if pi.n != f.dim:
        raise DimensionMismatch(f"bivector dimension {pi.n} does not match fan dimension {f.dim}")
    f.require_valid()
    strat = strat or stratify(f, build_polytope(f))
    mv = multivector_dims(f, strat)
    verdicts = {}
    counts = []
    for level in strat.levels:
        c = 0
        for wc in level:
            ok = poisson_condition(f, wc, pi)
            verdicts[wc.point] = ok
            c += ok
        counts.append(c)
    fano = is_fano(f)
    return PoissonReport(f.dim, pi, mv, verdicts, counts, binomial_dims(counts, f.dim),
                         fano, not fano)


def euler_characteristic(dims):
    return sum((-1) ** k * d for k, d in enumerate(dims))


def euler_check(f, pi: Bivector) -> bool:
    rep = poisson_cohomology(f, pi)
    return euler_characteristic(rep.dims) == euler_characteristic(rep.multivector.dims)
