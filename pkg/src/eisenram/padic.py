"""Exact integer arithmetic and truncated p-adic integers.

Polynomials are plain tuples of ``int`` coefficients, constant term first.
Valuations are ``int``/``Fraction`` values, or ``INF`` for zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientPrecision, InvalidInput, NonUnit, NotMonic

INF = math.inf


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    return p


def val_int(n: int, p: int):
    """Exponent of ``p`` in ``n``; ``INF`` for ``n == 0``."""
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def format_val(v) -> str:
    """Exact string form: ``"5/2"``, ``"3"`` or ``"inf"``."""
    if v == INF:
        return "inf"
    return str(Fraction(v))


@dataclass(frozen=True)
class BaseField:
    """Q_p with an absolute precision cap of ``N`` digits for inexact work."""

    p: int
    N: int = 64

    def __post_init__(self):
        check_prime(self.p)
        if self.N < 1:
            raise InvalidInput("precision cap must be positive")


@dataclass(frozen=True)
class AtLeast:
    """Certificate ``v >= bound`` for a residue that vanishes at its precision.

    Comparisons that the bound decides return a bool; the rest raise
    ``InsufficientPrecision``.
    """

    bound: int

    def __ge__(self, other):
        if other <= self.bound:
            return True
        raise InsufficientPrecision(f"valuation >= {self.bound} cannot decide >= {other}", self.bound)

    def __gt__(self, other):
        if other < self.bound:
            return True
        raise InsufficientPrecision(f"valuation >= {self.bound} cannot decide > {other}", self.bound)

    def __lt__(self, other):
        return not self.__ge__(other)

    def __le__(self, other):
        return not self.__gt__(other)


@dataclass(frozen=True)
class TruncatedInt:
    """An element of Z_p known modulo ``p**precision``."""

    residue: int
    precision: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.p**self.precision)

    @classmethod
    def of(cls, n: int, p: int, precision: int) -> TruncatedInt:
        return cls(n, precision, p)

    def _other(self, other):
        if isinstance(other, TruncatedInt):
            if other.p != self.p:
                raise InvalidInput("mixed primes")
            return other.residue, other.precision
        return other, self.precision

    def __add__(self, other):
        r, n = self._other(other)
        return TruncatedInt(self.residue + r, min(self.precision, n), self.p)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedInt(-self.residue, self.precision, self.p)

    def __sub__(self, other):
        r, n = self._other(other)
        return TruncatedInt(self.residue - r, min(self.precision, n), self.p)

    def __mul__(self, other):
        r, n = self._other(other)
        # x*y known modulo p^min(nx + v(y), ny + v(x))
        vx = min(self.valuation_bound(), self.precision)
        vy = min(val_int(r % self.p**n, self.p), n)
        prec = min(self.precision + vy, n + vx)
        return TruncatedInt(self.residue * r, prec, self.p)

    __rmul__ = __mul__

    def valuation_bound(self):
        v = val_int(self.residue, self.p)
        return self.precision if v == INF else v

    def valuation(self):
        """Exact valuation, or ``AtLeast(precision)`` when the residue is zero."""
        if self.residue == 0:
            return AtLeast(self.precision)
        return val_int(self.residue, self.p)

    def lift(self) -> int:
        """Representative in the symmetric range around zero."""
        m = self.p**self.precision
        r = self.residue
        return r - m if r > m // 2 else r

    def __eq__(self, other):
        if isinstance(other, int):
            return (self.residue - other) % self.p**self.precision == 0
        if isinstance(other, TruncatedInt):
            n = min(self.precision, other.precision)
            return self.p == other.p and (self.residue - other.residue) % self.p**n == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.precision, self.p))


def mod_inverse(x: TruncatedInt) -> TruncatedInt:
    if x.residue == 0:
        raise InsufficientPrecision("cannot invert a residue that is zero at its precision", x.precision)
    if x.residue % x.p == 0:
        raise NonUnit(f"{x.residue} is not a unit modulo {x.p}")
    return TruncatedInt(pow(x.residue, -1, x.p**x.precision), x.precision, x.p)


# polynomials


def strip(poly) -> tuple:
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def degree(poly) -> int:
    return len(strip(poly)) - 1


def is_monic(poly) -> bool:
    poly = strip(poly)
    return bool(poly) and poly[-1] == 1


def derivative(poly) -> tuple:
    return strip(i * c for i, c in enumerate(poly))[1:] if len(poly) > 1 else ()


def poly_eval(poly, x):
    acc = 0
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def poly_mul(f, g) -> tuple:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return strip(out)


def from_roots(roots) -> tuple:
    """Monic integer polynomial with the given integer roots."""
    poly = (1,)
    for r in roots:
        poly = poly_mul(poly, (-r, 1))
    return poly


def sylvester_matrix(f, g) -> list[list[int]]:
    f, g = strip(f), strip(g)
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def det_bareiss(matrix) -> int:
    """Fraction-free Gaussian elimination; exact for integer matrices."""
    a = [list(row) for row in matrix]
    n = len(a)
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


def sylvester_resultant(f, g) -> int:
    """Res(f, g) for arbitrary nonzero integer polynomials (Sylvester determinant)."""
    f, g = strip(f), strip(g)
    if not f or not g:
        return 0
    if len(f) == 1 and len(g) == 1:
        return 1
    return det_bareiss(sylvester_matrix(f, g))


def resultant(f, g) -> int:
    """Resultant of two monic integer polynomials of positive degree."""
    for h in (f, g):
        if not is_monic(h):
            raise NotMonic(f"resultant needs monic input, got {tuple(h)}")
        if degree(h) < 1:
            raise InvalidInput("resultant needs positive degree")
    return sylvester_resultant(f, g)


def format_poly(poly, var: str = "x") -> str:
    """Canonical printer, e.g. ``(-2, 4, 1) -> "x^2+4x-2"``."""
    poly = strip(poly)
    if not poly:
        return "0"
    out = ""
    for k in range(len(poly) - 1, -1, -1):
        c = poly[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        if not out:
            out = body if sign == "+" else "-" + body
        else:
            out += sign + body
    return out
