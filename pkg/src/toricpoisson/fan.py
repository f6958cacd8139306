"""Smooth complete fans: storage, validation, standard constructions and JSON I/O.

A fan is stored through its rays (primitive vectors of N = Z^n) and its
maximal cones, each a sorted tuple of ray indices.  Lower-dimensional cones
are never stored; they are the subsets of maximal cones.

Completeness is tested combinatorially: with smooth full-dimensional cones,
the support is all of R^n exactly when every ridge ((n-1)-face) lies in two
maximal cones.  Overlapping cones that still satisfy this count are not
detected.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field

from . import exact
from .errors import InvalidDimension, InvalidFan, NotAFace, ParseError


@dataclass(frozen=True)
class Issue:
    """One violated fan invariant, e.g. ``RidgeCount(ridge=(0,), count=1)``."""

    kind: str
    detail: dict = field(default_factory=dict)

    def __str__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"{self.kind}({args})"

    def to_json(self):
        return {"kind": self.kind,
                **{k: list(v) if isinstance(v, tuple) else v for k, v in self.detail.items()}}


@dataclass
class ValidationReport:
    issues: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def kinds(self):
        return [i.kind for i in self.issues]

    def to_json(self):
        return {"valid": self.ok, "issues": [i.to_json() for i in self.issues]}


@dataclass(frozen=True)
class Fan:
    """Rays and maximal cones of a fan in R^dim.

    Construction performs no validation beyond coercing to tuples and
    sorting each cone; call :meth:`validate` (or :meth:`require_valid`).
    """

    dim: int
    rays: tuple
    max_cones: tuple
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        object.__setattr__(self, "max_cones",
                           tuple(tuple(sorted(int(i) for i in c)) for c in self.max_cones))

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    def cone_rays(self, cone):
        return [self.rays[i] for i in cone]

    def validate(self) -> ValidationReport:
        return validate(self)

    def require_valid(self) -> "Fan":
        report = validate(self)
        if not report.ok:
            raise InvalidFan(report)
        return self

    def normalized(self) -> "Fan":
        """Same fan with every nonzero ray replaced by its primitive generator."""
        rays = [exact.primitive(r) if any(r) else r for r in self.rays]
        return Fan(self.dim, rays, self.max_cones, self.name)

    def transform(self, u) -> "Fan":
        """Image of the fan under the linear map ``e -> u e`` on N."""
        rays = [tuple(sum(u[i][j] * r[j] for j in range(self.dim)) for i in range(self.dim))
                for r in self.rays]
        return Fan(self.dim, rays, self.max_cones, self.name)

    def to_json(self) -> dict:
        out = {}
        if self.name is not None:
            out["name"] = self.name
        out["rays"] = [list(r) for r in self.rays]
        out["max_cones"] = [list(c) for c in self.max_cones]
        return out

    @classmethod
    def from_json(cls, obj) -> "Fan":
        if not isinstance(obj, dict):
            raise ParseError("fan JSON must be an object")
        try:
            rays = obj["rays"]
            cones = obj["max_cones"]
        except KeyError as exc:
            raise ParseError(f"fan JSON is missing {exc.args[0]!r}") from None
        name = obj.get("name")
        if not isinstance(rays, list) or not rays:
            raise ParseError("'rays' must be a non-empty list")
        if not isinstance(cones, list):
            raise ParseError("'max_cones' must be a list")
        for r in rays:
            if not isinstance(r, list) or not all(_is_int(x) for x in r):
                raise ParseError(f"ray {r!r} is not a list of integers")
        for c in cones:
            if not isinstance(c, list) or not all(_is_int(x) for x in c):
                raise ParseError(f"cone {c!r} is not a list of integers")
        dim = len(rays[0])
        return cls(dim, rays, cones, name)


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def loads(text: str, normalize: bool = False) -> Fan:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    fan = Fan.from_json(obj)
    return fan.normalized() if normalize else fan


def load(path, normalize: bool = False) -> Fan:
    with open(path) as fh:
        return loads(fh.read(), normalize=normalize)


def dumps(fan: Fan) -> str:
    return json.dumps(fan.to_json())


def validate(f: Fan) -> ValidationReport:
    """List every violated invariant of a smooth complete fan."""
    issues = []
    n = f.dim
    if n < 1:
        issues.append(Issue("InvalidDimension", {"dim": n}))
        return ValidationReport(issues)

    bad_rays = set()
    for idx, r in enumerate(f.rays):
        if len(r) != n:
            issues.append(Issue("RayDimension", {"index": idx, "length": len(r)}))
            bad_rays.add(idx)
        elif not any(r):
            issues.append(Issue("ZeroRay", {"index": idx}))
            bad_rays.add(idx)
        elif exact.primitive(r) != r:
            issues.append(Issue("NonPrimitiveRay", {"index": idx}))

    first_seen = {}
    for idx, r in enumerate(f.rays):
        if idx in bad_rays:
            continue
        key = exact.primitive(r)
        if key in first_seen:
            issues.append(Issue("DuplicateRay", {"index": idx, "first": first_seen[key]}))
        else:
            first_seen[key] = idx

    good_cones = []
    for c in f.max_cones:
        if len(c) != n or len(set(c)) != n or any(i < 0 or i >= f.n_rays for i in c):
            issues.append(Issue("BadCone", {"cone": c}))
            continue
        good_cones.append(c)
        if any(i in bad_rays for i in c):
            continue
        if abs(exact.det(f.cone_rays(c))) != 1:
            issues.append(Issue("NonSmoothCone", {"cone": c}))

    if not f.max_cones:
        issues.append(Issue("NoCones", {}))

    ridges = Counter()
    for c in good_cones:
        for ridge in itertools.combinations(c, n - 1):
            ridges[ridge] += 1
    for ridge in sorted(ridges):
        if ridges[ridge] != 2:
            issues.append(Issue("RidgeCount", {"ridge": ridge, "count": ridges[ridge]}))

    used = {i for c in f.max_cones for i in c}
    for idx in range(f.n_rays):
        if idx not in used:
            issues.append(Issue("UnusedRay", {"index": idx}))
    return ValidationReport(issues)


# -- constructors -----------------------------------------------------------

def projective_space(n: int) -> Fan:
    """Fan of CP^n: the unit vectors, minus their sum, all n-subsets as cones."""
    if n < 1:
        raise InvalidDimension("projective space needs n >= 1")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = list(itertools.combinations(range(n + 1), n))
    return Fan(n, rays, cones, f"P{n}")


def hirzebruch(a: int) -> Fan:
    """Fan of the Hirzebruch surface F_a."""
    if a < 0:
        raise InvalidDimension("Hirzebruch surfaces need a >= 0")
    rays = [(1, 0), (0, 1), (-1, a), (0, -1)]
    cones = [(0, 1), (1, 2), (2, 3), (0, 3)]
    return Fan(2, rays, cones, f"F{a}")


def product(f: Fan, g: Fan) -> Fan:
    """Fan of the product variety: padded rays, cones are unions of pairs."""
    for h in (f, g):
        if h.dim < 1 or not validate(h).ok:
            raise InvalidFan(validate(h))
    rays = [tuple(r) + (0,) * g.dim for r in f.rays]
    rays += [(0,) * f.dim + tuple(r) for r in g.rays]
    off = f.n_rays
    cones = [tuple(a) + tuple(off + i for i in b) for a in f.max_cones for b in g.max_cones]
    name = f"{f.name}x{g.name}" if f.name and g.name else None
    return Fan(f.dim + g.dim, rays, cones, name)


def star_subdivide(f: Fan, c) -> Fan:
    """Star subdivision at the cone ``c`` (blowup of its orbit closure).

    The new ray is the primitive sum of the rays of ``c`` and is appended at
    the end, so existing ray indices stay valid.
    """
    c = tuple(sorted(c))
    if len(c) < 2 or len(c) > f.dim:
        raise NotAFace(f"cone {c} must have between 2 and {f.dim} rays")
    containing = [m for m in f.max_cones if set(c) <= set(m)]
    if not containing:
        raise NotAFace(f"cone {c} is not a face of any maximal cone")
    new_ray = exact.primitive([sum(f.rays[i][j] for i in c) for j in range(f.dim)])
    new_idx = f.n_rays
    cones = [m for m in f.max_cones if m not in containing]
    for m in containing:
        for gen in c:
            cones.append(tuple(new_idx if i == gen else i for i in m))
    return Fan(f.dim, list(f.rays) + [new_ray], cones, f.name and f"{f.name}_blowup")


def del_pezzo6() -> Fan:
    """CP^2 blown up at the three torus-fixed points (hexagonal fan)."""
    f = projective_space(2)
    for c in [(0, 1), (1, 2), (0, 2)]:
        f = star_subdivide(f, c)
    return Fan(f.dim, f.rays, f.max_cones, "dP6")


# -- symmetries -------------------------------------------------------------

def lattice_automorphisms(f: Fan):
    """All U in GL(n, Z) permuting the rays and the maximal cones of ``f``.

    Each automorphism is determined by the ordered image of the rays of the
    first maximal cone, so the search runs over cones times orderings.
    """
    f.require_valid()
    n = f.dim
    base = f.max_cones[0]
    b0 = exact.transpose(f.cone_rays(base))  # columns are the base rays
    inv = _inverse(b0)
    ray_index = {r: i for i, r in enumerate(f.rays)}
    cone_set = set(f.max_cones)
    found = []
    for tau in f.max_cones:
        for perm in itertools.permutations(tau):
            bt = exact.transpose([f.rays[i] for i in perm])
            u = exact.matmul(bt, inv)
            if any(x.denominator != 1 for row in u for x in row):
                continue
            u = tuple(tuple(int(x) for x in row) for row in u)
            img = []
            for r in f.rays:
                ur = tuple(sum(u[i][j] * r[j] for j in range(n)) for i in range(n))
                if ur not in ray_index:
                    break
                img.append(ray_index[ur])
            else:
                if all(tuple(sorted(img[i] for i in m)) in cone_set for m in f.max_cones):
                    found.append(u)
    return found


def _inverse(m):
    n = len(m)
    cols = [exact.solve_square(m, [int(i == j) for i in range(n)]) for j in range(n)]
    return exact.transpose(cols)
