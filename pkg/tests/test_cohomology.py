import random
from math import comb

import pytest

import toricpoisson as tp
from toricpoisson.cohomology import binomial_dims, euler_characteristic, poisson_condition
from toricpoisson.errors import DimensionMismatch
from toricpoisson.exact import GaussianRational as G
from toricpoisson.exterior import Bivector

from conftest import FANS, apply, inverse_transpose, random_bivector, random_unimodular

# Frozen from the closed-form computation; the strand oracle agrees (see test_oracle).
EXPECTED = {
    "P1": ([1, 2], [1, 3], 2),
    "P2": ([1, 6, 3], [1, 8, 10], 6),
    "P3": ([1, 12, 18, 4], [1, 15, 45, 35], 12),
    "F0": ([1, 4, 4], [1, 6, 9], 4),
    "F1": ([1, 4, 4], [1, 6, 9], 4),
    "F2": ([1, 5, 3], [1, 7, 9], 5),
    "dP6": ([1, 0, 6], [1, 2, 7], 0),
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_multivector_dims(name):
    strata, dims, roots = EXPECTED[name]
    rep = tp.multivector_dims(FANS[name])
    assert rep.strata == strata and rep.dims == dims
    assert len(tp.demazure_roots(FANS[name])) == roots
    assert rep.to_json() == {"dims_h0_wedge": dims, "strata": strata}


def test_classical_values():
    # Vector fields on P^n: dim gl(n+1) - 1; top degree: anticanonical sections.
    for n in (1, 2, 3):
        dims = tp.multivector_dims(tp.projective_space(n)).dims
        assert dims[1] == (n + 1) ** 2 - 1
        assert dims[n] == comb(2 * n + 1, n)
    assert tp.multivector_dims(tp.product(tp.projective_space(1), tp.projective_space(2))).dims \
        == [1, 11, 34, 30]


def test_binomial_dims():
    assert binomial_dims([1, 6, 3], 2) == [1, 8, 10]
    assert binomial_dims([1, 0, 0], 2) == [1, 2, 1]


def test_decomposition():
    rep = tp.multivector_dims(tp.projective_space(2))
    dec = rep.decomposition(1)
    assert ((0, 0), 2) in dec and ((-1, 0), 1) in dec
    assert sum(d for _, d in dec) == rep.dims[1]
    assert sum(d for _, d in rep.decomposition(2)) == rep.dims[2]


def test_roots_p2():
    roots = tp.demazure_roots(tp.projective_space(2))
    assert roots == [(-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0)]


def test_roots_f2_include_unipotent_direction():
    roots = tp.demazure_roots(tp.hirzebruch(2))
    # A root pairs to -1 with exactly one ray and nonnegatively with the rest.
    assert len(roots) == 5 and (1, 1) in roots
    for r in roots:
        pairs = [sum(a * b for a, b in zip(r, ray)) for ray in tp.hirzebruch(2).rays]
        assert pairs.count(-1) == 1 and min(pairs) == -1


def test_poisson_condition_examples():
    p2 = tp.projective_space(2)
    pi = Bivector(2, {(0, 1): 1})
    assert poisson_condition(p2, tp.classify_weight(p2, (0, 0)), pi)
    # (-1, 0) is active on e1 only; the contraction (0, -1) is not a multiple of e1.
    assert not poisson_condition(p2, tp.classify_weight(p2, (-1, 0)), pi)
    # vertices always pass: the active rays span everything.
    assert poisson_condition(p2, tp.classify_weight(p2, (-1, -1)), pi)
    # a nonzero contraction at level zero fails
    p1 = tp.projective_space(1)
    assert poisson_condition(p1, tp.classify_weight(p1, (0,)), Bivector.zero(1))


def test_poisson_examples():
    pi = Bivector(2, {(0, 1): 1})
    rep = tp.poisson_cohomology(tp.projective_space(2), pi)
    assert rep.strata_pi == [1, 0, 3] and rep.dims == [1, 2, 4]
    assert rep.fano and not rep.conditional
    assert tp.poisson_cohomology(tp.hirzebruch(0), pi).dims == [1, 2, 5]
    f2 = tp.poisson_cohomology(tp.hirzebruch(2), pi)
    assert f2.dims == [1, 2, 4] and f2.conditional and not f2.fano
    p3 = tp.poisson_cohomology(tp.projective_space(3), Bivector(3, {(0, 1): 1}))
    assert p3.dims == [1, 5, 10, 10]
    generic = Bivector(3, {(0, 1): 1, (0, 2): G(0, 1), (1, 2): 3})
    assert tp.poisson_cohomology(tp.projective_space(3), generic).dims == [1, 3, 3, 5]


def test_zero_bivector_gives_multivector_dims(named_fan):
    _, f = named_fan
    rep = tp.poisson_cohomology(f, Bivector.zero(f.dim))
    assert rep.dims == rep.multivector.dims and rep.failed_weights == []


def test_report_json_and_dim():
    rep = tp.poisson_cohomology(tp.projective_space(2), Bivector(2, {(0, 1): 1}))
    js = rep.to_json()
    assert js["dims_h0_wedge"] == [1, 8, 10]
    assert js["poisson"]["dims"] == [1, 2, 4]
    assert js["poisson"]["fano"] is True and js["poisson"]["conditional"] is False
    assert len(js["poisson"]["failed_weights"]) == 6
    assert rep.dim(5) == 0 and rep.dim(2) == 4


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        tp.poisson_cohomology(tp.projective_space(2), Bivector.zero(3))


def test_euler(named_fan, rng):
    _, f = named_fan
    for _ in range(5):
        pi = random_bivector(rng, f.dim)
        rep = tp.poisson_cohomology(f, pi)
        # Only whole strands drop out, each with Euler characteristic zero
        # unless the level is n.
        assert euler_characteristic(rep.dims) - euler_characteristic(rep.multivector.dims) \
            == (-1) ** f.dim * (rep.strata_pi[f.dim] - rep.multivector.strata[f.dim])
        assert tp.euler_check(f, pi) == (rep.strata_pi[f.dim] == rep.multivector.strata[f.dim])


def test_bounds(named_fan, rng):
    _, f = named_fan
    n = f.dim
    for _ in range(10):
        rep = tp.poisson_cohomology(f, random_bivector(rng, n))
        assert rep.dims[0] == 1
        assert all(a <= b for a, b in zip(rep.dims, rep.multivector.dims))
        assert rep.dims[n] >= rep.multivector.strata[n]
        # vertices always pass the test
        assert rep.strata_pi[n] == rep.multivector.strata[n]
        assert all(a <= b for a, b in zip(rep.strata_pi, rep.multivector.strata))


def test_one_dimensional_only_zero_bivector():
    assert Bivector(1).is_zero()
    with pytest.raises(DimensionMismatch):
        Bivector(1, {(0, 0): 1})
    rep = tp.poisson_cohomology(tp.projective_space(1), Bivector(1))
    assert rep.dims == [1, 3]


@pytest.mark.parametrize("name", ["P2", "P3", "F0", "F1", "F2", "dP6"])
def test_equivariance(name):
    rng = random.Random(5)
    f = FANS[name]
    for _ in range(5):
        pi = random_bivector(rng, f.dim)
        u = random_unimodular(rng, f.dim)
        a = tp.poisson_cohomology(f, pi)
        b = tp.poisson_cohomology(f.transform(u), pi.transform(u))
        assert a.dims == b.dims and a.strata_pi == b.strata_pi
        ut = inverse_transpose(u)
        assert {apply(ut, p) for p in a.failed_weights} == set(b.failed_weights)


def test_scaling_invariance(named_fan, rng):
    _, f = named_fan
    for _ in range(5):
        pi = random_bivector(rng, f.dim)
        c = G(rng.randint(1, 5), rng.randint(-3, 3))
        assert tp.poisson_cohomology(f, pi.scale(c)).dims == tp.poisson_cohomology(f, pi).dims
