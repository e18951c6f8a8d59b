"""Arithmetic in O_L = Z_p[x]/(f) for an Eisenstein polynomial f.

An element is a coordinate vector (c_0, ..., c_{e-1}) for sum c_i pi^i
together with an absolute precision ``prec`` counted in powers of pi: the
true element lies in x + pi^prec O_L.  Because p = pi^e * unit, coordinates
only need to be kept modulo p^ceil(prec/e).
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InsufficientPrecision,
    InvalidInput,
    MixedExtensions,
    NotEisenstein,
    NotGalois,
    NotMonic,
    UnsupportedMultipleRoot,
)
from .padic import (
    INF,
    TruncatedInt,
    check_prime,
    derivative,
    format_poly,
    is_monic,
    strip,
    sylvester_resultant,
    val_int,
)


def default_digits(e: int) -> int:
    return 32 * e


@dataclass(frozen=True, order=True)
class EisensteinPoly:
    """X^e + a_{e-1} X^{e-1} + ... + a_0 over Q_p; ``coeffs`` is (a_0, ..., a_{e-1})."""

    p: int
    coeffs: tuple

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if not self.coeffs:
            raise NotEisenstein(0, "degree must be at least 1")
        for i, a in enumerate(self.coeffs):
            if val_int(a, self.p) < 1:
                raise NotEisenstein(i)
        if val_int(self.coeffs[0], self.p) != 1:
            raise NotEisenstein(0)

    @property
    def e(self) -> int:
        return len(self.coeffs)

    @property
    def poly(self) -> tuple:
        return self.coeffs + (1,)

    @property
    def tame(self) -> bool:
        return self.e % self.p != 0

    def __str__(self):
        return format_poly(self.poly)


def make_eisenstein(coeffs, p: int) -> EisensteinPoly:
    """Validate a full coefficient list (constant first, leading 1 last)."""
    coeffs = strip(coeffs)
    if not is_monic(coeffs):
        raise NotMonic(f"polynomial {coeffs} is not monic")
    if len(coeffs) < 2:
        raise NotEisenstein(0, "degree must be at least 1")
    return EisensteinPoly(p, tuple(coeffs[:-1]))


class Ring:
    """O_L for the extension cut out by ``f``, with ``digits`` p-adic digits of working precision."""

    def __init__(self, f: EisensteinPoly, digits: int | None = None):
        self.f = f
        self.p = f.p
        self.e = f.e
        self.digits = digits or default_digits(f.e)
        self.cap = self.e * self.digits

    def __eq__(self, other):
        return isinstance(other, Ring) and self.f == other.f and self.digits == other.digits

    def __hash__(self):
        return hash((self.f, self.digits))

    def __repr__(self):
        return f"Ring({self.f!r}, digits={self.digits})"

    def element(self, coords, prec=None) -> ExtElement:
        coords = tuple(coords) + (0,) * (self.e - len(coords))
        if len(coords) > self.e:
            raise InvalidInput("too many coordinates")
        return ExtElement(self, coords, self.cap if prec is None else min(prec, self.cap))

    def scalar(self, c: int) -> ExtElement:
        return self.element((c,))

    @property
    def zero(self) -> ExtElement:
        return self.scalar(0)

    @property
    def one(self) -> ExtElement:
        return self.scalar(1)

    @functools.cached_property
    def pi(self) -> ExtElement:
        if self.e == 1:
            return self.scalar(-self.f.coeffs[0])
        return self.element((0, 1))

    def from_poly(self, poly) -> ExtElement:
        """Evaluate an integer polynomial at pi."""
        acc = self.zero
        for c in reversed(tuple(poly)):
            acc = acc * self.pi + c
        return acc

    def evaluate(self, poly, x: ExtElement) -> ExtElement:
        acc = self.zero
        for c in reversed(tuple(poly)):
            acc = acc * x + c
        return acc

    def _reduce(self, prod: list[int], prec: int) -> tuple:
        """Reduce a coefficient list of any length modulo f and p^ceil(prec/e)."""
        e, a = self.e, self.f.coeffs
        mod = self.p ** (-(-prec // e)) if prec > 0 else 1
        prod = list(prod)
        for k in range(len(prod) - 1, e - 1, -1):
            c = prod[k] % mod
            if c:
                for i in range(e):
                    prod[k - e + i] -= c * a[i]
            prod[k] = 0
        return tuple(c % mod for c in prod[:e]) + (0,) * max(0, e - len(prod))

    @functools.cached_property
    def p_over_pi(self) -> ExtElement:
        # pi^e = -p*w with w = sum (a_i/p) pi^i a unit, so p/pi = -pi^(e-1)/w
        w = self.element(tuple(a // self.p for a in self.f.coeffs))
        w_inv = w.unit_inverse()
        return -(self.pi ** (self.e - 1)) * w_inv


class ExtElement:
    __slots__ = ("ring", "coords", "prec")

    def __init__(self, ring: Ring, coords: tuple, prec: int):
        self.ring = ring
        self.prec = prec
        if prec <= 0:
            self.coords = (0,) * ring.e
        else:
            mod = ring.p ** (-(-prec // ring.e))
            self.coords = tuple(c % mod for c in coords)

    @property
    def defining(self) -> EisensteinPoly:
        return self.ring.f

    def __repr__(self):
        return f"ExtElement({self.coords}, prec={self.prec})"

    def __eq__(self, other):
        """Equality up to the smaller of the two precisions."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).is_zero()

    __hash__ = None

    def _coerce(self, other) -> ExtElement:
        if isinstance(other, ExtElement):
            if other.ring.f != self.ring.f:
                raise MixedExtensions("elements of different extensions")
            return other
        if isinstance(other, int):
            return self.ring.scalar(other)
        return NotImplemented

    def _new(self, coords, prec) -> ExtElement:
        return ExtElement(self.ring, coords, min(prec, self.ring.cap))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new([a + b for a, b in zip(self.coords, other.coords)], min(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coords], self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec + other.val_bound(), other.prec + self.val_bound())
        prec = min(prec, self.ring.cap)
        x, y = self.coords, other.coords
        prod = [0] * (2 * len(x) - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] += a * b
        return ExtElement(self.ring, self.ring._reduce(prod, prec), prec)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # valuations, counted in powers of pi

    def _val_candidate(self):
        e, p = self.ring.e, self.ring.p
        best = INF
        for i, c in enumerate(self.coords):
            if c:
                best = min(best, e * val_int(c, p) + i)
        return best

    def val_bound(self) -> int:
        """A certified lower bound for v_L(x): exact when x is nonzero at precision."""
        return min(self._val_candidate(), self.prec)

    def vl(self) -> int:
        """v_L(x) in powers of pi; raises if x vanishes at its precision."""
        v = self._val_candidate()
        if v >= self.prec:
            raise InsufficientPrecision(f"element is zero modulo pi^{self.prec}", self.prec)
        return v

    def is_zero(self) -> bool:
        """True when x vanishes at its precision (not a proof that x == 0)."""
        return self._val_candidate() >= self.prec

    def residue(self) -> int:
        """Image in the residue field F_p."""
        if self.prec < 1:
            raise InsufficientPrecision("no residue information", 0)
        return self.coords[0] % self.ring.p

    def exact(self) -> ExtElement:
        """Treat the stored coordinates as an exact approximant."""
        return ExtElement(self.ring, self.coords, self.ring.cap)

    def with_prec(self, prec: int) -> ExtElement:
        return ExtElement(self.ring, self.coords, min(prec, self.prec))

    def div_pi(self) -> ExtElement:
        p = self.ring.p
        if self.val_bound() < 1:
            raise InvalidInput("element is not divisible by pi")
        c0 = self.coords[0]
        shifted = self._new(self.coords[1:] + (0,), self.ring.cap)
        q = shifted + self.ring.p_over_pi * (c0 // p)
        return q.with_prec(self.prec - 1)

    def div_pi_power(self, k: int) -> ExtElement:
        x = self
        for _ in range(k):
            x = x.div_pi()
        return x

    def unit_inverse(self) -> ExtElement:
        ring = self.ring
        if self.prec < 1 or self.coords[0] % ring.p == 0:
            raise InvalidInput("element is not a unit")
        target = self.prec
        y = self.exact()
        z = ring.scalar(pow(self.coords[0], -1, ring.p))
        while True:
            r = ring.one - y * z
            if r.val_bound() >= target:
                break
            z = z + z * r
        return z.with_prec(target)

    def __truediv__(self, other):
        other = self._coerce(other)
        s = other.vl()
        if self.val_bound() < s:
            raise InvalidInput("quotient is not integral")
        num = self.div_pi_power(s)
        den = other.div_pi_power(s)
        return num * den.unit_inverse()


def ext_val(x: ExtElement) -> Fraction:
    """v_K(x), a rational with denominator dividing e."""
    return Fraction(x.vl(), x.ring.e)


def ext_arith(x: ExtElement, y: ExtElement, op: str) -> ExtElement:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    raise InvalidInput(f"unknown operation {op!r}")


def norm(x: ExtElement) -> TruncatedInt:
    """N_{L/K}(x) as Res(f, representative of x), reduced to its certified precision."""
    ring = x.ring
    e, p = ring.e, ring.p
    m = p ** max(-(-x.prec // e), 0)
    rep = strip(c - m if c > m // 2 else c for c in x.coords)
    value = sylvester_resultant(ring.f.poly, rep) if rep else 0
    # N(x + d) - N(x) has v_K >= v_K(d) + (e-1) min(v_K(x), v_K(d))
    digits = -(-(x.prec + (e - 1) * x.val_bound()) // e)
    return TruncatedInt(value, max(digits, 0), p)


def _as_ring(field, prec) -> Ring:
    if isinstance(field, Ring):
        return field
    digits = 2 * prec + 4 if prec else None
    return Ring(field, digits)


def hasse_derivatives(h) -> list[tuple]:
    """h_j with h(a + y) = sum_j h_j(a) y^j."""
    n = len(h) - 1
    return [strip(math.comb(i, j) * h[i] for i in range(j, n + 1)) for j in range(n + 1)]


def roots_of(h, field, prec: int | None = None, first_only: bool = False) -> list[ExtElement]:
    """All simple roots of the monic integer polynomial ``h`` in O_L.

    Residue classes a + pi^k O_L are refined breadth-first.  A class is kept
    only if h(a + pi^k y) has a root with v(y) >= 0 over the algebraic
    closure, read off its Newton polygon; the classes at one level are
    disjoint, so at most deg h of them survive.  A class is handed to Newton
    iteration once v(h(a)) > 2 v(h'(a)) and k > v(h'(a)), which makes the
    root in the class unique, and each root carries the precision certified
    by the Hensel bound v(root - a) >= v(h(a)) - v(h'(a)).  ``prec`` is the
    required precision in p-adic digits, by default half the working one.
    """
    h = strip(h)
    if not is_monic(h) or len(h) < 2:
        raise NotMonic("roots_of needs a monic polynomial of positive degree")
    ring = _as_ring(field, prec)
    want = ring.e * (prec if prec else ring.digits // 2)
    taylor = hasse_derivatives(h)
    p = ring.p
    roots = []
    level = [ring.zero]
    k = 0
    while level:
        nxt = []
        for a in level:
            ha = ring.evaluate(h, a)
            vh = ha.val_bound()
            da = ring.evaluate(taylor[1], a)
            vd = da.val_bound()
            if not ha.is_zero():
                # Newton polygon of h(a + pi^k y): a root with v(y) >= 0 needs
                # v(h(a)) >= v(h_j(a)) + jk for some j >= 1
                best = vd + k
                for j in range(2, len(taylor)):
                    if vh >= best:
                        break
                    best = min(best, ring.evaluate(taylor[j], a).val_bound() + j * k)
                if vh < best:
                    continue
            if vd < da.prec and vh > 2 * vd and k > vd:
                root = _newton(ring, h, taylor[1], a, vd)
                if root is not None and (root - a).val_bound() >= k:
                    if root.prec < want:
                        raise InsufficientPrecision(
                            f"root certified only to pi^{root.prec}, need pi^{want}", root.prec
                        )
                    roots.append(root)
                    if first_only:
                        return roots
                continue
            if k >= ring.cap - 1:
                if vd >= da.prec:
                    raise UnsupportedMultipleRoot("branch never separates: h is not squarefree over L")
                raise InsufficientPrecision("residue branching did not separate roots", ring.cap)
            step = ring.pi ** k
            for r in range(p):
                nxt.append((a + step * r).exact() if r else a)
        level = nxt
        k += 1
    return roots


def _newton(ring: Ring, h, dh, a: ExtElement, vd: int):
    # Newton on exact approximants; the inverse of h'(x)/pi^vd is carried
    # along and refined by one Schulz step per iteration instead of being
    # recomputed from scratch.
    x = a.exact()
    winv = None
    for _ in range(4 * ring.cap.bit_length() + 8):
        hx = ring.evaluate(h, x)
        if hx.is_zero():
            break
        w = ring.evaluate(dh, x).div_pi_power(vd).exact()
        if w.residue() == 0:
            return None
        winv = w.unit_inverse().exact() if winv is None else (winv + winv * (1 - w * winv)).exact()
        step = hx.div_pi_power(vd) * winv
        if step.is_zero():
            break
        x = (x - step).exact()
    hx = ring.evaluate(h, x)
    dx = ring.evaluate(dh, x)
    vh, vdx = hx.val_bound(), dx.val_bound()
    if vdx != vd or vh <= 2 * vd:
        return None
    return x.with_prec(vh - vd)


def has_root(h, field, prec: int | None = None):
    """First root of ``h`` in O_L, or None."""
    found = roots_of(h, field, prec, first_only=True)
    return found[0] if found else None


@dataclass(frozen=True)
class GaloisResult:
    galois: bool
    conjugates: tuple
    root_count: int


def galois_check(f: EisensteinPoly, digits: int | None = None) -> GaloisResult:
    """Galois iff f splits into e roots over O_L; conjugates are those roots, pi first."""
    ring = Ring(f, digits)
    roots = roots_of(f.poly, ring)
    pi = ring.pi
    roots.sort(key=lambda r: (-min((r - pi).val_bound(), r.prec), r.coords))
    return GaloisResult(len(roots) == f.e, tuple(roots), len(roots))


@functools.lru_cache(maxsize=4096)
def conjugates(f: EisensteinPoly, digits: int | None = None) -> tuple:
    """All sigma(pi) for Galois f, identity first; raises NotGalois otherwise."""
    res = galois_check(f, digits)
    if not res.galois:
        raise NotGalois(res.root_count, f.e)
    return res.conjugates
