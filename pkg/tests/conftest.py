import random
from fractions import Fraction

import pytest

import toricpoisson as tp
from toricpoisson import exact
from toricpoisson.exact import GaussianRational


def standard_fans():
    return {
        "P1": tp.projective_space(1),
        "P2": tp.projective_space(2),
        "P3": tp.projective_space(3),
        "F0": tp.hirzebruch(0),
        "F1": tp.hirzebruch(1),
        "F2": tp.hirzebruch(2),
        "dP6": tp.del_pezzo6(),
    }


FANS = standard_fans()


def random_gaussian(rng, zero_prob=0.25):
    if rng.random() < zero_prob:
        return GaussianRational(0)
    q = lambda: Fraction(rng.randint(-4, 4), rng.randint(1, 4))
    return GaussianRational(q(), q() if rng.random() < 0.7 else 0)


def random_bivector(rng, n, zero_prob=0.25):
    return tp.Bivector(n, {(i, j): random_gaussian(rng, zero_prob)
                           for i in range(n) for j in range(i + 1, n)})


def random_unimodular(rng, n, steps=4):
    """Product of random elementary matrices, a permutation and sign flips."""
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 1:
        return [[rng.choice([1, -1])]]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        e = [[int(a == b) for b in range(n)] for a in range(n)]
        e[i][j] = rng.choice([-2, -1, 1, 2])
        u = exact.matmul(e, u)
    perm = list(range(n))
    rng.shuffle(perm)
    u = [u[p] for p in perm]
    signs = [rng.choice([1, -1]) for _ in range(n)]
    u = [[s * x for x in row] for s, row in zip(signs, u)]
    assert abs(exact.det(u)) == 1
    return u


def inverse_transpose(u):
    n = len(u)
    cols = [exact.solve_square(u, [int(i == j) for i in range(n)]) for j in range(n)]
    # cols[j] is column j of U^{-1}; the inverse transpose has it as row j.
    return [[int(x) for x in col] for col in cols]


def apply(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture(params=sorted(FANS))
def named_fan(request):
    return request.param, FANS[request.param]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    outcomes = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            name = rep.nodeid.rpartition("::")[2]
            if "test_acceptance.py" in rep.nodeid and name.startswith("test_criterion_"):
                k = int(name.split("_")[2])
                if status == "passed" and outcomes.get(k) not in (None, "PASS"):
                    continue
                outcomes[k] = "PASS" if status == "passed" else "FAIL"
    if outcomes:
        terminalreporter.section("acceptance criteria")
        for k in sorted(outcomes):
            terminalreporter.write_line(f"criterion {k}: {outcomes[k]}  {CRITERIA[k]}")
