"""Exact arithmetic: rationals, Gaussian rationals and small dense linear algebra.

Rationals are :class:`fractions.Fraction`.  Complex scalars live in Q[i] and
are represented by :class:`GaussianRational`.  Matrices are plain lists of
rows; every routine here works over any field whose elements support the
usual arithmetic operators, so the same elimination code serves Q and Q[i].
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import InconsistentSystem, NonSquare, SingularMatrix, ZeroVector, ParseError


class GaussianRational:
    """An element ``re + im*i`` of Q[i] with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return GaussianRational(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, (int, _RationalABC)):
            return GaussianRational(x, 0)
        if isinstance(x, str):
            return parse_gaussian(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    @staticmethod
    def _other(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, _RationalABC)):
            return GaussianRational(x, 0)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q[i]")
        q = self * o.conjugate()
        return GaussianRational(q.re / n, q.im / n)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        out = GaussianRational(1)
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """``z * conj(z)``, a non-negative rational."""
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = "" if abs(self.im) == 1 else str(abs(self.im))
        if self.re == 0:
            return ("-" if self.im < 0 else "") + im + "i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj) -> "GaussianRational":
        if isinstance(obj, dict):
            return cls(parse_rational(obj.get("re", "0")), parse_rational(obj.get("im", "0")))
        return cls.coerce(obj)


IMAG_UNIT = GaussianRational(0, 1)

_TERM = re.compile(r"[+-]?[^+-]+")


def parse_rational(s) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction."""
    if isinstance(s, bool):
        raise ParseError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError(f"not a rational: {s!r}")
    try:
        if "." in s or "e" in s.lower():
            raise ValueError
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational: {s!r}") from None


def parse_gaussian(s: str) -> GaussianRational:
    """Parse strings like ``"1/2+1i"``, ``"-3i"``, ``"i"`` or ``"2"``."""
    text = s.replace(" ", "")
    if not text:
        raise ParseError("empty scalar")
    re_part, im_part = Fraction(0), Fraction(0)
    pos = 0
    for m in _TERM.finditer(text):
        if m.start() != pos:
            raise ParseError(f"malformed scalar {s!r}")
        pos = m.end()
        term = m.group()
        if term.endswith(("i", "j")):
            coeff = term[:-1]
            if coeff in ("", "+", "-"):
                coeff += "1"
            im_part += parse_rational(coeff)
        else:
            re_part += parse_rational(term)
    if pos != len(text):
        raise ParseError(f"malformed scalar {s!r}")
    return GaussianRational(re_part, im_part)


def format_rational(q) -> str:
    return str(Fraction(q))


def _to_field(x):
    if isinstance(x, GaussianRational):
        return x
    return Fraction(x)


def _copy(m):
    return [[_to_field(x) for x in row] for row in m]


# -- integer vectors and matrices -------------------------------------------

def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    v = tuple(int(x) for x in v)
    g = math.gcd(*v) if v else 0
    if g == 0:
        raise ZeroVector("the zero vector has no primitive generator")
    return tuple(x // g for x in v)


def det(m) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise NonSquare(f"matrix is {n}x{len(a[0]) if a else 0}")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def matmul(a, b):
    """Product of two matrices given as lists of rows."""
    if not a:
        return []
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("shape mismatch in matmul")
    cols = len(b[0]) if b else 0
    return [[sum((row[t] * b[t][j] for t in range(inner)), 0) for j in range(cols)]
            for row in a]


def transpose(m, cols=None):
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


# -- elimination over a field -----------------------------------------------

def rref(m):
    """Reduced row echelon form over Q or Q[i].

    Returns ``(rows, pivots)`` where ``pivots`` lists the pivot column of each
    nonzero row.
    """
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    """Rank over Q (integer/rational entries) or Q[i] (Gaussian entries)."""
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, rows):
            if a[i][c] != 0:
                f = a[i][c] / piv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def nullspace(m, cols=None):
    """Basis of the right kernel ``{x : m x = 0}``."""
    if cols is None:
        cols = len(m[0]) if m else 0
    if not m:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    a, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * cols
        x[f] = Fraction(1)
        for row, p in zip(a, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def solve(m, b):
    """A solution of ``m x = b``; unique when ``m`` has full column rank.

    Raises :class:`InconsistentSystem` when ``b`` is outside the column span.
    """
    rows = len(m)
    if len(b) != rows:
        raise ValueError("right-hand side has the wrong length")
    cols = len(m[0]) if m else 0
    aug = [list(row) + [rhs] for row, rhs in zip(m, b)]
    a, pivots = rref(aug)
    if cols in pivots:
        raise InconsistentSystem("right-hand side is not in the column span")
    x = [Fraction(0)] * cols
    for row, p in zip(a, pivots):
        x[p] = row[cols]
    return x


def solve_square(m, b):
    """Unique solution of a nonsingular square system."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare("solve_square needs a square matrix")
    if rank(m) < n:
        raise SingularMatrix("matrix is singular")
    return solve(m, b)
