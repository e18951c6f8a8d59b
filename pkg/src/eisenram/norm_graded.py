"""Norm maps on the graded pieces of the unit filtrations.

For n >= 0 with s = psi(n) (Serre numbering) the norm induces

    N_n : U_L^s / U_L^(s+1) -> U_K^n / U_K^(n+1).

Both sides are coordinatised by F_p: 1 + c*pi^s <-> c for s >= 1, and the
residue class of a unit for s = 0 (where the target is F_p^*).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentResult, InsufficientPrecision
from .extension import EisensteinPoly, norm
from .ramification import RamificationData, ramification_data, serre_lower_order, to_serre


@dataclass(frozen=True)
class GradedNormTable:
    f: EisensteinPoly
    n: int
    psi_n: int
    table: dict  # coordinate -> coordinate
    theta: dict  # conjugate index -> coordinate of sigma(pi)/pi, for sigma in G_psi(n)

    @property
    def p(self) -> int:
        return self.f.p

    @property
    def neutral(self) -> int:
        return 1 if self.psi_n == 0 else 0

    @property
    def theta_image(self) -> frozenset:
        return frozenset(self.theta.values())

    @property
    def image(self) -> frozenset:
        return frozenset(self.table.values())

    @property
    def kernel(self) -> frozenset:
        return frozenset(c for c, v in self.table.items() if v == self.neutral)

    @property
    def target_size(self) -> int:
        return self.p - 1 if self.psi_n == 0 else self.p

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "psi_n": self.psi_n,
            "table": [[c, v] for c, v in sorted(self.table.items())],
            "theta_image": sorted(self.theta_image),
            "exact": exactness_check_table(self),
            "coker_order": coker_order_table(self),
        }


def _level(f: EisensteinPoly, n: int, digits):
    rd = ramification_data(f, digits)
    s = to_serre(rd).psi_int(n)
    return rd, s


def _coordinate(N, n: int, p: int) -> int:
    """Coordinate of a norm in U_K^n / U_K^(n+1)."""
    if N.precision < n + 1:
        raise InsufficientPrecision(f"norm known to {N.precision} digits, level {n} needs {n + 1}", N.precision)
    value = N.lift()
    if n == 0:
        return value % p
    if (value - 1) % p**n:
        raise InconsistentResult(f"norm {value} is not in U_K^{n}")
    return ((value - 1) // p**n) % p


def _norm_table(rd: RamificationData, n: int, s: int) -> dict:
    ring = rd.conjugates[0].ring
    p, pi = rd.p, ring.pi
    table = {}
    for c in range(1 if s == 0 else 0, p):
        if s == 0:
            lifts = (ring.scalar(c), ring.scalar(c + p) + pi)
        else:
            lifts = (1 + pi**s * c, 1 + pi**s * (c + p) + pi ** (s + 1))
        coords = {_coordinate(norm(x), n, p) for x in lifts}
        if len(coords) != 1:
            raise InconsistentResult(f"graded norm at level {n} depends on the lift of {c}")
        table[c] = coords.pop()
    return table


def _theta(rd: RamificationData, s: int) -> dict:
    conj = rd.conjugates
    out = {0: 1 if s == 0 else 0}
    for j, sigma in enumerate(conj[1:], start=1):
        if rd.e * rd.i_values[j - 1] - 1 < s:
            continue
        x = sigma.div_pi()
        if s == 0:
            out[j] = x.residue()
        else:
            out[j] = (x - 1).div_pi_power(s).residue()
    return out


def graded_norm(f: EisensteinPoly, n: int, digits: int | None = None) -> GradedNormTable:
    if n < 0:
        raise ValueError("level must be nonnegative")
    rd, s = _level(f, n, digits)
    return GradedNormTable(f, n, s, _norm_table(rd, n, s), _theta(rd, s))


def theta_image(f: EisensteinPoly, n: int, digits: int | None = None) -> frozenset:
    rd, s = _level(f, n, digits)
    return frozenset(_theta(rd, s).values())


def quotient_order(f: EisensteinPoly, n: int, digits: int | None = None) -> int:
    """#(G_s / G_(s+1)) with s = psi(n), Serre numbering."""
    rd, s = _level(f, n, digits)
    return serre_lower_order(rd, s) // serre_lower_order(rd, s + 1)


def theta_injective(t: GradedNormTable, rd: RamificationData) -> bool:
    """theta_n is injective on G_s / G_(s+1): every fibre is one coset of G_(s+1)."""
    s = t.psi_n
    fibre = serre_lower_order(rd, s + 1)
    counts = {}
    for v in t.theta.values():
        counts[v] = counts.get(v, 0) + 1
    return all(k == fibre for k in counts.values()) and len(counts) * fibre == serre_lower_order(rd, s)


def exactness_check_table(t: GradedNormTable) -> bool:
    rd = ramification_data(t.f)
    return t.theta_image == t.kernel and theta_injective(t, rd)


def coker_order_table(t: GradedNormTable) -> int:
    index = Fraction(t.target_size, len(t.image))
    if index.denominator != 1:
        raise InconsistentResult(f"image of size {len(t.image)} is not a subgroup of a group of order {t.target_size}")
    return int(index)


def exactness_check(f: EisensteinPoly, n: int, digits: int | None = None) -> bool:
    return exactness_check_table(graded_norm(f, n, digits))


def coker_order(f: EisensteinPoly, n: int, digits: int | None = None) -> int:
    return coker_order_table(graded_norm(f, n, digits))


def is_additive(t: GradedNormTable) -> bool:
    """Homomorphism check: additive on F_p for s >= 1, multiplicative on F_p^* for s = 0."""
    p, tab = t.p, t.table
    if t.psi_n == 0:
        return all(tab[a * b % p] == tab[a] * tab[b] % p for a in tab for b in tab)
    return all(tab[(a + b) % p] == (tab[a] + tab[b]) % p for a in tab for b in tab)
