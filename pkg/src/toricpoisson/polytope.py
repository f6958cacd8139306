"""The anticanonical polytope of a fan and the classification of its lattice points.

For a fan with rays e_1..e_r the polytope is ``{I : <I, e_t> >= -1 for all t}``
in M_R.  Each lattice point I is classified by its *active* rays (pairing
exactly -1); the rank of the active rays is the codimension of the open face
containing I, called the level of I.  Levels are used in place of an explicit
face lattice.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import exact
from .errors import NotInPolytope, SingularMatrix, UnboundedPolytope
from .fan import Fan


def pairing(m, e):
    return sum(a * b for a, b in zip(m, e))


class HalfSpace(NamedTuple):
    """``{I : <I, normal> >= bound}``."""

    normal: tuple
    bound: int = -1

    def contains(self, point) -> bool:
        return pairing(point, self.normal) >= self.bound

    def is_active(self, point) -> bool:
        return pairing(point, self.normal) == self.bound


@dataclass(frozen=True)
class Polytope:
    dim: int
    half_spaces: tuple
    vertices: tuple
    lattice_points: tuple

    def contains(self, point) -> bool:
        return all(h.contains(point) for h in self.half_spaces)


@dataclass(frozen=True)
class WeightClassification:
    """A lattice point of the polytope with its active rays and level."""

    point: tuple
    active: tuple
    level: int
    normal_basis: tuple  # ray indices, a basis of the span of the active rays


@dataclass(frozen=True)
class Stratification:
    """Lattice points of the polytope grouped by level 0..n."""

    dim: int
    levels: tuple  # levels[i] is a sorted tuple of WeightClassification

    @property
    def counts(self):
        return [len(lv) for lv in self.levels]

    def points(self, i):
        return [wc.point for wc in self.levels[i]]

    def all(self):
        """Every classified point, in lexicographic order of the point."""
        return sorted((wc for lv in self.levels for wc in lv), key=lambda wc: wc.point)

    def up_to(self, k):
        """Points of level at most k."""
        return [wc for i in range(min(k, self.dim) + 1) for wc in self.levels[i]]

    def to_json(self):
        return {"levels": [{"i": i, "count": len(lv), "points": [list(wc.point) for wc in lv]}
                           for i, lv in enumerate(self.levels)]}


def half_spaces(f: Fan):
    return tuple(HalfSpace(tuple(r)) for r in f.rays)


def enumerate_vertices(hs, dim):
    """Vertices of ``{I : all half-spaces hold}`` by solving every n-subset."""
    hs = list(hs)
    found = set()
    for sub in itertools.combinations(hs, dim):
        m = [list(h.normal) for h in sub]
        if exact.rank(m) < dim:
            continue
        x = tuple(exact.solve(m, [Fraction(h.bound) for h in sub]))
        if all(h.contains(x) for h in hs):
            found.add(x)
    return sorted(found)


def _check_bounded(f: Fan):
    # -e_j and e_j must lie in the support; then the normals span positively and
    # the recession cone of the polytope is zero.
    n = f.dim
    for j in range(n):
        for s in (1, -1):
            target = [s * int(i == j) for i in range(n)]
            for c in f.max_cones:
                cols = exact.transpose(f.cone_rays(c))
                try:
                    coeffs = exact.solve_square(cols, target)
                except SingularMatrix:
                    continue
                if all(x >= 0 for x in coeffs):
                    break
            else:
                raise UnboundedPolytope(f"direction {target} is outside the fan's support")


def build_polytope(f: Fan) -> Polytope:
    f.require_valid()
    _check_bounded(f)
    hs = half_spaces(f)
    verts = enumerate_vertices(hs, f.dim)
    if not verts:
        raise UnboundedPolytope("polytope has no vertices")
    pts = _lattice_points(hs, verts, f.dim)
    return Polytope(f.dim, hs, tuple(verts), tuple(pts))


def _lattice_points(hs, verts, dim):
    lo = [math.ceil(min(v[j] for v in verts)) for j in range(dim)]
    hi = [math.floor(max(v[j] for v in verts)) for j in range(dim)]
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    return [p for p in itertools.product(*ranges) if all(h.contains(p) for h in hs)]


def lattice_points(p: Polytope):
    return list(p.lattice_points)


def cone_vertex(f: Fan, cone):
    """The point pairing to -1 with every generator of a maximal cone."""
    m = [list(r) for r in f.cone_rays(cone)]
    u = exact.solve_square(m, [-1] * f.dim)
    if any(x.denominator != 1 for x in u):
        raise SingularMatrix(f"cone {cone} is not unimodular")
    return tuple(int(x) for x in u)


def classify_weight(f: Fan, point) -> WeightClassification:
    point = tuple(int(x) for x in point)
    pairs = [pairing(point, r) for r in f.rays]
    bad = [t for t, p in enumerate(pairs) if p < -1]
    if bad:
        raise NotInPolytope(f"{point} violates the constraints of rays {bad}")
    active = tuple(t for t, p in enumerate(pairs) if p == -1)
    basis = []
    for t in active:
        if exact.rank([f.rays[s] for s in basis + [t]]) > len(basis):
            basis.append(t)
    return WeightClassification(point, active, len(basis), tuple(basis))


def stratify(f: Fan, polytope: Polytope | None = None) -> Stratification:
    p = polytope or build_polytope(f)
    levels = [[] for _ in range(f.dim + 1)]
    for pt in p.lattice_points:
        wc = classify_weight(f, pt)
        levels[wc.level].append(wc)
    return Stratification(f.dim, tuple(tuple(lv) for lv in levels))


def is_fano(f: Fan) -> bool:
    """Strict convexity of the anticanonical support function.

    Every cone vertex must pair strictly above -1 with every ray outside its
    cone.
    """
    f.require_valid()
    for c in f.max_cones:
        u = cone_vertex(f, c)
        for t, r in enumerate(f.rays):
            if t not in c and pairing(u, r) <= -1:
                return False
    return True
