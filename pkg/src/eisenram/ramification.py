"""Ramification invariants of a Galois totally ramified extension.

Lower numbering here is Fontaine's: sigma lies in G_(i) iff
v_K(sigma(pi) - pi) >= i.  Everything is computed from the multiset of
those values; the abstract group is never built.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput
from .extension import EisensteinPoly, ExtElement, conjugates, ext_val


@dataclass(frozen=True)
class PiecewiseLinear:
    """Increasing piecewise-linear map through ``vertices``, slope 1 past the last one."""

    vertices: tuple  # ((x0, y0), (x1, y1), ...) with x0 = y0 = 0

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if x < 0:
            raise InvalidInput("argument must be nonnegative")
        pts = self.vertices
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x <= x1:
                return y0 + (x - x0) * (y1 - y0) / (x1 - x0)
        xl, yl = pts[-1]
        return yl + (x - xl)

    def inverse(self) -> PiecewiseLinear:
        return PiecewiseLinear(tuple((y, x) for x, y in self.vertices))


@dataclass(frozen=True)
class RamificationData:
    f: EisensteinPoly
    conjugates: tuple  # sigma(pi), identity first
    i_values: tuple  # i(sigma) for each non-identity conjugate, in conjugate order

    @property
    def e(self) -> int:
        return self.f.e

    @property
    def p(self) -> int:
        return self.f.p

    @property
    def i_multiset(self) -> tuple:
        return tuple(sorted(self.i_values))

    @property
    def i_breaks(self) -> tuple:
        """Distinct jumps of the lower filtration, increasing."""
        return tuple(sorted(set(self.i_values)))

    @property
    def i_break(self) -> Fraction:
        return max(self.i_values)

    @functools.cached_property
    def phi(self) -> PiecewiseLinear:
        pts = [(Fraction(0), Fraction(0))]
        for t in self.i_breaks:
            x0, y0 = pts[-1]
            pts.append((t, y0 + (t - x0) * self.filtration_order(t)))
        return PiecewiseLinear(tuple(pts))

    @functools.cached_property
    def psi(self) -> PiecewiseLinear:
        return self.phi.inverse()

    @property
    def phi_vertices(self) -> tuple:
        return self.phi.vertices

    @property
    def u_breaks(self) -> tuple:
        return tuple(self.phi(t) for t in self.i_breaks)

    @property
    def u_break(self) -> Fraction:
        return self.phi(self.i_break)

    def filtration_order(self, i) -> int:
        """#G_(i); the identity always counts."""
        if i < 0:
            raise InvalidInput("filtration index must be nonnegative")
        return 1 + sum(1 for v in self.i_values if v >= i)

    def upper_order(self, u) -> int:
        """#G^(u)."""
        return self.filtration_order(self.psi(u))

    def filtration_steps(self) -> list:
        """[(t, #G_(t))] for 0 and each jump t: the order on (previous jump, t]."""
        return [(Fraction(0), self.e)] + [(t, self.filtration_order(t)) for t in self.i_breaks]


@functools.lru_cache(maxsize=4096)
def ramification_data(f: EisensteinPoly, digits: int | None = None) -> RamificationData:
    conj = conjugates(f, digits)
    pi = conj[0]
    i_values = tuple(ext_val(s - pi) for s in conj[1:])
    return RamificationData(f, conj, i_values)


def phi_eval(rd: RamificationData, i) -> Fraction:
    return rd.phi(i)


def psi_eval(rd: RamificationData, u) -> Fraction:
    return rd.psi(u)


def filtration_order(rd: RamificationData, i) -> int:
    return rd.filtration_order(i)


@dataclass(frozen=True)
class SerreData:
    e: int
    lower_breaks: tuple
    upper_breaks: tuple
    psi_fontaine: PiecewiseLinear

    def psi(self, u) -> Fraction:
        """Serre's psi: psi(u) = e * psi~(u + 1) - 1."""
        return self.e * self.psi_fontaine(Fraction(u) + 1) - 1

    def phi(self, i) -> Fraction:
        return self.psi_fontaine.inverse()((Fraction(i) + 1) / self.e) - 1

    def psi_int(self, n: int) -> int:
        """psi(n) rounded up, so that U_L^psi(n) is a genuine filtration step."""
        return math.ceil(self.psi(n))


def to_serre(rd: RamificationData) -> SerreData:
    return SerreData(
        rd.e,
        tuple(rd.e * t - 1 for t in rd.i_breaks),
        tuple(u - 1 for u in rd.u_breaks),
        rd.psi,
    )


def from_serre(sd: SerreData) -> tuple:
    """Fontaine (i_breaks, u_breaks) recovered from Serre numbering."""
    return (
        tuple(Fraction(b + 1) / sd.e for b in sd.lower_breaks),
        tuple(u + 1 for u in sd.upper_breaks),
    )


def serre_lower_order(rd: RamificationData, s) -> int:
    """#G_s in Serre's lower numbering (G_s = G_((s+1)/e))."""
    return rd.filtration_order(max(Fraction(s + 1) / rd.e, Fraction(0)))


def closest_conjugate(x: ExtElement, conj) -> int:
    return max(range(len(conj)), key=lambda j: (x - conj[j]).val_bound())


def composition_table(rd: RamificationData) -> list[list[int]]:
    """table[j][k] = index of sigma_j o sigma_k, with sigma_j(pi) = conjugates[j]."""
    conj = rd.conjugates
    ring = conj[0].ring
    table = []
    for sj in conj:
        row = []
        for sk in conj:
            # sigma_j(sigma_k(pi)) = (sigma_k(pi) as a polynomial in pi) at sigma_j(pi)
            image = ring.evaluate(sk.coords, sj)
            row.append(closest_conjugate(image, conj))
        table.append(row)
    return table


def is_abelian(rd: RamificationData) -> bool:
    t = composition_table(rd)
    n = len(t)
    return all(t[j][k] == t[k][j] for j in range(n) for k in range(n))


def element_orders(rd: RamificationData) -> list[int]:
    t = composition_table(rd)
    orders = []
    for j in range(len(t)):
        k, n = j, 1
        while k != 0:
            k = t[j][k]
            n += 1
        orders.append(n)
    return orders
