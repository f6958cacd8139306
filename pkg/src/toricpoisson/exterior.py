"""Exterior algebra of N_C with Gaussian-rational coefficients.

Multivectors are sparse maps from strictly increasing 0-based index tuples
to :class:`~toricpoisson.exact.GaussianRational`.  Holomorphic multivector
fields of weight I are handled through their coefficient multivector, so the
whole computation stays on this side.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb

from . import exact
from .errors import DimensionMismatch, MixedDegrees, ParseError
from .exact import GaussianRational

_ZERO = GaussianRational(0)


def subsets(n, k):
    """k-subsets of range(n) in colexicographic order."""
    return sorted(itertools.combinations(range(n), k), key=lambda s: s[::-1])


class Multivector:
    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs=None):
        self.n = n
        self.degree = degree
        clean = {}
        if degree <= n:
            for key, val in (coeffs or {}).items():
                key = tuple(key)
                if (len(key) != degree or list(key) != sorted(set(key))
                        or (key and (key[0] < 0 or key[-1] >= n))):
                    raise ValueError(f"bad index set {key} for degree {degree} in dimension {n}")
                val = GaussianRational.coerce(val)
                if val:
                    clean[key] = val
        self.coeffs = clean

    @classmethod
    def scalar(cls, n, c=1):
        return cls(n, 0, {(): c})

    @classmethod
    def vector(cls, entries):
        """Degree-one multivector with the given coordinates."""
        entries = list(entries)
        return cls(len(entries), 1, {(i,): c for i, c in enumerate(entries)})

    @classmethod
    def basis_vector(cls, n, i):
        return cls(n, 1, {(i,): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch(f"ambient dimensions {self.n} and {other.n}")
        if other.degree != self.degree:
            raise MixedDegrees(f"degrees {self.degree} and {other.degree}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, _ZERO) + v
        return Multivector(self.n, self.degree, out)

    def __neg__(self):
        return Multivector(self.n, self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = GaussianRational.coerce(c)
        return Multivector(self.n, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return (self.n, self.degree, self.coeffs) == (other.n, other.degree, other.coeffs)

    def __hash__(self):
        return hash((self.n, self.degree, frozenset(self.coeffs.items())))

    def coordinates(self):
        """Dense coefficient list in the colexicographic subset basis."""
        if self.degree > self.n:
            return []
        return [self.coeffs.get(s, _ZERO) for s in subsets(self.n, self.degree)]

    def __repr__(self):
        if not self.coeffs:
            return f"Multivector(n={self.n}, degree={self.degree}, 0)"
        terms = " + ".join(f"({v})e{''.join(str(i + 1) for i in k) or '∅'}"
                           for k, v in sorted(self.coeffs.items(), key=lambda kv: kv[0][::-1]))
        return f"Multivector(n={self.n}, {terms})"

    def to_json(self):
        return {"n": self.n, "degree": self.degree,
                "terms": [{"indices": [i + 1 for i in k], **v.to_json()}
                          for k, v in sorted(self.coeffs.items(), key=lambda kv: kv[0][::-1])]}


def _merge_sign(a, b):
    """Sign of the shuffle sorting the concatenation of disjoint sorted tuples."""
    inversions = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inversions += j
    return -1 if inversions % 2 else 1


def wedge(a: Multivector, b: Multivector) -> Multivector:
    if a.n != b.n:
        raise DimensionMismatch(f"ambient dimensions {a.n} and {b.n}")
    deg = a.degree + b.degree
    out = {}
    if deg <= a.n:
        for ka, va in a.coeffs.items():
            for kb, vb in b.coeffs.items():
                if set(ka) & set(kb):
                    continue
                key = tuple(sorted(ka + kb))
                term = va * vb if _merge_sign(ka, kb) > 0 else -(va * vb)
                out[key] = out.get(key, _ZERO) + term
    return Multivector(a.n, deg, out)


def wedge_all(vs, n):
    out = Multivector.scalar(n)
    for v in vs:
        out = wedge(out, v)
    return out


class Bivector:
    """Constant bivector ``sum_{i<j} a_ij e_i ^ e_j`` (0-based i, j)."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries=None):
        self.n = n
        clean = {}
        for (i, j), a in (entries or {}).items():
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise DimensionMismatch(f"index pair ({i + 1}, {j + 1}) invalid for n={n}")
            a = GaussianRational.coerce(a)
            if i > j:
                i, j, a = j, i, -a
            val = clean.get((i, j), _ZERO) + a
            if val:
                clean[(i, j)] = val
            else:
                clean.pop((i, j), None)
        self.entries = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    def a(self, i, j):
        if i < j:
            return self.entries.get((i, j), _ZERO)
        if i > j:
            return -self.entries.get((j, i), _ZERO)
        return _ZERO

    def matrix(self):
        return [[self.a(i, j) for j in range(self.n)] for i in range(self.n)]

    def is_zero(self):
        return not self.entries

    def scale(self, c):
        c = GaussianRational.coerce(c)
        return Bivector(self.n, {k: c * v for k, v in self.entries.items()})

    def transform(self, u):
        """Image under the map induced by ``e -> u e`` on the second exterior power."""
        cols = [[u[r][j] for r in range(self.n)] for j in range(self.n)]
        total = Multivector(self.n, 2)
        for (i, j), a in self.entries.items():
            total = total + wedge(Multivector.vector(cols[i]), Multivector.vector(cols[j])).scale(a)
        return Bivector(self.n, {k: v for k, v in total.coeffs.items()})

    def as_multivector(self):
        return Multivector(self.n, 2, dict(self.entries))

    def __eq__(self, other):
        return isinstance(other, Bivector) and (self.n, self.entries) == (other.n, other.entries)

    def __repr__(self):
        body = ", ".join(f"a{i + 1}{j + 1}={v}" for (i, j), v in sorted(self.entries.items()))
        return f"Bivector(n={self.n}, {body or '0'})"

    def to_json(self):
        return {"entries": [{"i": i + 1, "j": j + 1, **v.to_json()}
                            for (i, j), v in sorted(self.entries.items())]}

    @classmethod
    def from_json(cls, obj, n):
        if not isinstance(obj, dict) or not isinstance(obj.get("entries"), list):
            raise ParseError("bivector JSON must be an object with an 'entries' list")
        if "n" in obj and obj["n"] != n:
            raise DimensionMismatch(f"bivector has dimension {obj['n']}, expected {n}")
        entries = {}
        for e in obj["entries"]:
            try:
                i, j = e["i"], e["j"]
            except (KeyError, TypeError):
                raise ParseError(f"bivector entry {e!r} needs 'i' and 'j'") from None
            if not (isinstance(i, int) and isinstance(j, int)):
                raise ParseError(f"bivector indices must be integers: {e!r}")
            val = GaussianRational(exact.parse_rational(e.get("re", "0")),
                                   exact.parse_rational(e.get("im", "0")))
            _add_entry(entries, i, j, val, n)
        return cls(n, entries)

    @classmethod
    def parse_inline(cls, text, n):
        """Parse ``"a12=1, a13=1/2+1i"`` (1-based indices)."""
        entries = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            key, sep, val = part.partition("=")
            key = key.strip()
            if not sep or not key.startswith("a"):
                raise ParseError(f"bad bivector term {part!r}")
            idx = key[1:]
            if "_" in idx:
                i, _, j = idx.partition("_")
            elif len(idx) == 2:
                i, j = idx[0], idx[1]
            else:
                raise ParseError(f"ambiguous index {key!r}; write a{{i}}_{{j}} for n > 9")
            if not (i.isdigit() and j.isdigit()):
                raise ParseError(f"bad index in {key!r}")
            _add_entry(entries, int(i), int(j), exact.parse_gaussian(val), n)
        return cls(n, entries)


def _add_entry(entries, i, j, val, n):
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise DimensionMismatch(f"bivector index pair ({i}, {j}) is invalid for dimension {n}")
    key = (i - 1, j - 1)
    entries[key] = entries.get(key, _ZERO) + val


def load_bivector(path, n):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    return Bivector.from_json(obj, n)


def contract(point, pi: Bivector) -> Multivector:
    """``sum_{i<j} a_ij (I_i e_j - I_j e_i)``, the weight paired into the bivector."""
    point = tuple(point)
    if len(point) != pi.n:
        raise DimensionMismatch(f"weight has length {len(point)}, bivector dimension {pi.n}")
    coords = [_ZERO] * pi.n
    for (i, j), a in pi.entries.items():
        coords[j] = coords[j] + a * point[i]
        coords[i] = coords[i] - a * point[j]
    return Multivector.vector(coords)


def multivector_rank(vs) -> int:
    vs = list(vs)
    if not vs:
        return 0
    n, deg = vs[0].n, vs[0].degree
    for v in vs:
        if v.n != n:
            raise DimensionMismatch("multivectors live in different dimensions")
        if v.degree != deg:
            raise MixedDegrees("multivectors of different degrees")
    if deg > n:
        return 0
    return exact.rank([v.coordinates() for v in vs])


@dataclass(frozen=True)
class WeightSpaceBasis:
    weight: tuple
    degree: int
    level: int
    generator: Multivector  # wedge of the normal basis; defined up to scale
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)


def degree_one_rays(rays, n):
    return [Multivector.vector(r) for r in rays]


def weight_space_basis(f, wc, k, normal_basis=None) -> WeightSpaceBasis:
    """Basis of the degree-k multivectors divisible by the active-ray generator.

    The normal basis is extended to a basis of Q^n with unit vectors (ascending
    index); the basis is the generator wedged with every (k - level)-subset of
    those complementary vectors.
    """
    n = f.dim
    rays = [f.rays[t] for t in (wc.normal_basis if normal_basis is None else normal_basis)]
    level = len(rays)
    gen = wedge_all(degree_one_rays(rays, n), n)
    if level > k:
        return WeightSpaceBasis(wc.point, k, level, gen, ())
    chosen = [list(r) for r in rays]
    extra = []
    for j in range(n):
        unit = [int(i == j) for i in range(n)]
        if exact.rank(chosen + [unit]) > len(chosen):
            chosen.append(unit)
            extra.append(Multivector.basis_vector(n, j))
    basis = tuple(wedge(gen, wedge_all(sub, n)) for sub in itertools.combinations(extra, k - level))
    assert len(basis) == comb(n - level, k - level)
    return WeightSpaceBasis(wc.point, k, level, gen, basis)
