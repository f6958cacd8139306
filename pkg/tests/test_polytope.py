import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.spatial import HalfspaceIntersection

import toricpoisson as tp
from toricpoisson.errors import NotInPolytope, UnboundedPolytope
from toricpoisson.polytope import enumerate_vertices, half_spaces, pairing

from conftest import FANS, apply, inverse_transpose, random_unimodular


def scipy_vertices(f):
    """Float vertices from scipy's half-space intersection (0 is interior)."""
    rays = np.array(f.rays, dtype=float)
    if f.dim == 1:
        lo = max(-1 / r[0] for r in f.rays if r[0] > 0)
        hi = min(-1 / r[0] for r in f.rays if r[0] < 0)
        return sorted({(lo,), (hi,)})
    hs = np.hstack([-rays, -np.ones((len(rays), 1))])
    pts = HalfspaceIntersection(hs, np.zeros(f.dim)).intersections
    uniq = []
    for p in pts:
        if not any(np.allclose(p, q, atol=1e-9) for q in uniq):
            uniq.append(p)
    return sorted(tuple(float(x) for x in p) for p in uniq)


def same_vertices(exact_verts, float_verts):
    ours = sorted(tuple(float(x) for x in v) for v in exact_verts)
    return len(ours) == len(float_verts) and np.allclose(ours, float_verts, atol=1e-9)


def brute_lattice_points(f, radius=8):
    box = itertools.product(range(-radius, radius + 1), repeat=f.dim)
    return [p for p in box if all(pairing(p, r) >= -1 for r in f.rays)]


@pytest.mark.parametrize("name", sorted(FANS))
def test_vertices_match_scipy(name):
    f = FANS[name]
    assert same_vertices(tp.build_polytope(f).vertices, scipy_vertices(f))


@pytest.mark.parametrize("name", sorted(FANS))
def test_lattice_points_match_brute_force(name):
    f = FANS[name]
    assert list(tp.build_polytope(f).lattice_points) == brute_lattice_points(f)


def test_build_polytope_examples():
    p1 = tp.build_polytope(tp.projective_space(1))
    assert p1.vertices == ((-1,), (1,)) and p1.lattice_points == ((-1,), (0,), (1,))
    p2 = tp.build_polytope(tp.projective_space(2))
    assert set(p2.vertices) == {(-1, -1), (2, -1), (-1, 2)}
    assert len(p2.lattice_points) == 10
    f1 = tp.build_polytope(tp.hirzebruch(1))
    assert set(f1.vertices) == {(-1, -1), (0, -1), (2, 1), (-1, 1)}
    assert len(f1.lattice_points) == 9


def test_pick_theorem_on_projective_plane():
    # Area 9/2, 9 boundary points, 1 interior: Pick gives 9/2 = 1 + 9/2 - 1.
    strat = tp.stratify(tp.projective_space(2))
    interior, boundary = strat.counts[0], sum(strat.counts[1:])
    v = [(-1, -1), (2, -1), (-1, 2)]
    area = Fraction(abs((v[1][0] - v[0][0]) * (v[2][1] - v[0][1])
                        - (v[2][0] - v[0][0]) * (v[1][1] - v[0][1])), 2)
    assert area == interior + Fraction(boundary, 2) - 1
    assert (interior, boundary) == (1, 9)


def test_vertex_counts():
    assert len(tp.build_polytope(tp.projective_space(2)).vertices) == 3
    assert len(tp.build_polytope(tp.hirzebruch(0)).vertices) == 4
    # F_2's polytope is a triangle: the cone vertex of {(0,1), (-1,2)} coincides
    # with that of {(1,0), (0,1)}.
    f2 = tp.hirzebruch(2)
    verts = set(tp.build_polytope(f2).vertices)
    assert verts == {(-1, -1), (-1, 1), (3, 1)}
    assert tp.cone_vertex(f2, (1, 2)) == tp.cone_vertex(f2, (0, 1)) == (-1, -1)


def test_non_integral_vertex():
    # F_3 has an anticanonical polytope with a rational vertex.
    f3 = tp.hirzebruch(3)
    verts = tp.build_polytope(f3).vertices
    assert (Fraction(-1), Fraction(-2, 3)) in verts
    assert same_vertices(verts, scipy_vertices(f3))


def test_cone_vertex_examples():
    p2 = tp.projective_space(2)
    assert tp.cone_vertex(p2, (0, 1)) == (-1, -1)
    assert tp.cone_vertex(p2, (1, 2)) == (2, -1)
    assert tp.cone_vertex(tp.projective_space(1), (1,)) == (1,)


def test_classify_examples():
    p2 = tp.projective_space(2)
    wc = tp.classify_weight(p2, (0, 0))
    assert wc.active == () and wc.level == 0
    wc = tp.classify_weight(p2, (-1, 0))
    assert wc.active == (0,) and wc.level == 1
    wc = tp.classify_weight(p2, (-1, -1))
    assert wc.active == (0, 1) and wc.level == 2 and wc.normal_basis == (0, 1)
    with pytest.raises(NotInPolytope):
        tp.classify_weight(p2, (-2, 0))


def test_level_can_be_smaller_than_active_count():
    # At (-1, -1) on F_2 three rays are active but they span only a plane.
    wc = tp.classify_weight(tp.hirzebruch(2), (-1, -1))
    assert wc.active == (0, 1, 2) and wc.level == 2 and wc.normal_basis == (0, 1)


def _face_dim(f, point, verts):
    """Dimension of the smallest face containing ``point``, from its vertices."""
    active = [r for r in f.rays if pairing(point, r) == -1]
    face = [v for v in verts if all(pairing(v, r) == -1 for r in active)]
    if len(face) == 1:
        return 0
    arr = np.array([[float(x) for x in v] for v in face])
    return int(np.linalg.matrix_rank(arr[1:] - arr[0]))


@pytest.mark.parametrize("name", sorted(FANS))
def test_level_is_face_codimension(name):
    f = FANS[name]
    p = tp.build_polytope(f)
    for pt in p.lattice_points:
        wc = tp.classify_weight(f, pt)
        assert wc.level == f.dim - _face_dim(f, pt, p.vertices)


def test_stratify_examples():
    assert tp.stratify(tp.projective_space(2)).counts == [1, 6, 3]
    assert tp.stratify(tp.hirzebruch(0)).counts == [1, 4, 4]
    assert tp.stratify(tp.hirzebruch(1)).counts == [1, 4, 4]
    js = tp.stratify(tp.projective_space(1)).to_json()
    assert js == {"levels": [{"i": 0, "count": 1, "points": [[0]]},
                             {"i": 1, "count": 2, "points": [[-1], [1]]}]}


@pytest.mark.parametrize("name", sorted(FANS))
def test_stratification_invariants(name):
    f = FANS[name]
    p = tp.build_polytope(f)
    strat = tp.stratify(f, p)
    assert sum(strat.counts) == len(p.lattice_points)
    assert strat.points(0) == [(0,) * f.dim]
    lattice_vertices = [v for v in p.vertices if all(x.denominator == 1 for x in v)]
    assert strat.counts[f.dim] == len(lattice_vertices)
    for k in range(f.dim):
        assert {wc.point for wc in strat.up_to(k)} <= {wc.point for wc in strat.up_to(k + 1)}
    assert len(strat.up_to(f.dim)) == len(p.lattice_points)
    for wc in strat.all():
        assert wc.level <= min(f.dim, len(wc.active))
        assert (wc.level == 0) == (wc.active == ())


@pytest.mark.parametrize("name", sorted(FANS))
def test_cone_vertices(name):
    f = FANS[name]
    p = tp.build_polytope(f)
    us = {tp.cone_vertex(f, c) for c in f.max_cones}
    for c in f.max_cones:
        u = tp.cone_vertex(f, c)
        assert all(pairing(u, f.rays[t]) == -1 for t in c)
    if tp.is_fano(f):
        assert us == set(p.vertices)
        assert tp.stratify(f, p).counts[f.dim] == len(f.max_cones)


def test_fano():
    for n in (1, 2, 3):
        assert tp.is_fano(tp.projective_space(n))
    assert tp.is_fano(tp.hirzebruch(0)) and tp.is_fano(tp.hirzebruch(1))
    assert tp.is_fano(tp.del_pezzo6())
    f2 = tp.hirzebruch(2)
    assert not tp.is_fano(f2)
    # The cone vertex of {(0,1), (-1,2)} pairs to exactly -1 with the ray (1,0).
    assert pairing(tp.cone_vertex(f2, (1, 2)), (1, 0)) == -1


@pytest.mark.parametrize("name", ["P2", "P3", "F0", "F1", "F2", "dP6"])
def test_level_counts_equivariant(name):
    rng = random.Random(11)
    f = FANS[name]
    base = tp.stratify(f)
    for _ in range(5):
        u = random_unimodular(rng, f.dim)
        g = f.transform(u)
        strat = tp.stratify(g)
        assert strat.counts == base.counts
        ut = inverse_transpose(u)
        assert {apply(ut, wc.point) for wc in base.all()} == {wc.point for wc in strat.all()}


def test_unbounded_detected():
    # Two cones covering the upper half plane: -e2 is outside the support.
    from toricpoisson.polytope import _check_bounded
    f = tp.Fan(2, [(1, 0), (0, 1), (-1, 0)], [(0, 1), (1, 2)])
    assert not f.validate().ok
    with pytest.raises(UnboundedPolytope):
        _check_bounded(f)
    _check_bounded(tp.projective_space(2))
    assert len(enumerate_vertices(half_spaces(tp.projective_space(2)), 2)) == 3
