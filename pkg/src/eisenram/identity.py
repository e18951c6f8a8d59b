"""Deciding whether two Eisenstein polynomials define the same extension.

The distance criterion is exact on both sides of the break: distance above
u_break forces the same field (Krasner), distance exactly u_break - 1/e
forces different fields.  Everything else goes to the root-finding oracle:
K(pi_f) and K(pi_g) are isomorphic iff f has a root in K(pi_g).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import BadUnitClass, NonIntegerBreak, NotConstructible
from .extension import EisensteinPoly, ExtElement, Ring, has_root
from .metric import check_pair, distance_E
from .padic import format_poly, format_val, val_int
from .ramification import ramification_data


class Verdict(str, Enum):
    SAME = "Same"
    DIFFERENT = "Different"
    UNKNOWN = "Unknown"


class Reason(str, Enum):
    KRASNER_BOUND = "KrasnerBound"
    BREAK_GAP = "BreakGap"
    ORACLE_ROOTS = "OracleRoots"
    ORACLE_NO_ROOTS = "OracleNoRoots"


@dataclass(frozen=True)
class DecisionOutcome:
    verdict: Verdict
    reason: Reason | None
    distance: object
    u_break: Fraction | None = None
    certificate: dict | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "reason": self.reason.value if self.reason else None,
            "distance": format_val(self.distance),
            "u_break": format_val(self.u_break) if self.u_break is not None else None,
            "certificate": self.certificate,
        }


def same_extension(f: EisensteinPoly, g: EisensteinPoly, digits: int | None = None) -> ExtElement | None:
    """A root of f in K(pi_g), or None when the fields are not isomorphic."""
    check_pair(f, g)
    return has_root(f.poly, Ring(g, digits))


def decide(f: EisensteinPoly, g: EisensteinPoly, digits: int | None = None) -> DecisionOutcome:
    """Verdict from the distance alone; f must define a Galois extension."""
    check_pair(f, g)
    u = ramification_data(f, digits).u_break
    d = distance_E(f, g)
    if d > u:
        return DecisionOutcome(Verdict.SAME, Reason.KRASNER_BOUND, d, u)
    if d == u - Fraction(1, f.e):
        return DecisionOutcome(Verdict.DIFFERENT, Reason.BREAK_GAP, d, u)
    return DecisionOutcome(Verdict.UNKNOWN, None, d, u)


def decide_with_oracle(f: EisensteinPoly, g: EisensteinPoly, digits: int | None = None) -> DecisionOutcome:
    """Oracle verdict: search for a root of f in K(pi_g)."""
    check_pair(f, g)
    u = ramification_data(f, digits).u_break
    d = distance_E(f, g)
    root = same_extension(f, g, digits)
    if root is not None:
        cert = {"root_coords": [str(c) for c in root.coords], "root_prec": root.prec, "field": format_poly(g.poly)}
        return DecisionOutcome(Verdict.SAME, Reason.ORACLE_ROOTS, d, u, cert)
    return DecisionOutcome(Verdict.DIFFERENT, Reason.ORACLE_NO_ROOTS, d, u, {"exhausted": True, "field": format_poly(g.poly)})


def wild_counterexample(f: EisensteinPoly, digits: int | None = None) -> EisensteinPoly:
    """g with distance_E(f, g) = u_break - 1/e, hence a different extension.

    One coefficient moves: index i = (e*u - 1) mod e gains p^delta with
    delta = (e*u - 1 - i)/e.
    """
    rd = ramification_data(f, digits)
    u, e, p = rd.u_break, f.e, f.p
    if u <= 1:
        raise NotConstructible("tame extension: distinct Eisenstein pairs are never closer than u_break - 1/e")
    t = e * u - 1
    if t.denominator != 1:
        raise NotConstructible(f"e*u_break - 1 = {t} is not an integer")
    t = int(t)
    i = t % e
    delta = (t - i) // e
    if delta < 1:
        raise NotConstructible(f"perturbation exponent {delta} < 1")
    for shift in (p**delta, -(p**delta)):
        coeffs = list(f.coeffs)
        coeffs[i] += shift
        if val_int(coeffs[0], p) == 1:
            return EisensteinPoly(p, tuple(coeffs))
    raise NotConstructible("no perturbation keeps the constant term at valuation 1")


def integer_break(f: EisensteinPoly, digits: int | None = None) -> int:
    u = ramification_data(f, digits).u_break
    if u.denominator != 1:
        raise NonIntegerBreak(f"u_break = {u} is not an integer")
    return int(u)


def unit_classes(p: int, m: int) -> range:
    """Residue classes c giving units in U^(m-1) minus U^m."""
    return range(2, p) if m == 1 else range(1, p)


def gu_family(f: EisensteinPoly, c: int, digits: int | None = None) -> EisensteinPoly:
    """f with a_0 replaced by u*a_0, u in U^(m-1) minus U^m, m = u_break.

    u = 1 + c*p^(m-1) for m >= 2; for m = 1 the unit is c itself, which must
    not be congruent to 0 or 1.
    """
    m = integer_break(f, digits)
    p = f.p
    if c % p == 0 or (m == 1 and c % p == 1):
        raise BadUnitClass(f"class {c} does not give a unit in U^{m - 1} minus U^{m}")
    u = c if m == 1 else 1 + c * p ** (m - 1)
    return EisensteinPoly(p, (u * f.coeffs[0],) + f.coeffs[1:])


@dataclass(frozen=True)
class TBreakResult:
    holds: bool
    witness: tuple | None  # (g_u, DecisionOutcome) for the first Different class
    sweep: tuple  # ((c, g_u, DecisionOutcome), ...)

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witness": None
            if self.witness is None
            else {"g": format_poly(self.witness[0].poly), "outcome": self.witness[1].to_json()},
            "sweep": [
                {"c": c, "g": format_poly(g.poly), "verdict": o.verdict.value, "reason": o.reason.value}
                for c, g, o in self.sweep
            ],
        }


def tbreak_check(f: EisensteinPoly, digits: int | None = None) -> TBreakResult:
    """Does every g at distance exactly u_break from f define the same field?

    Only the g_u family needs checking; over Q_p the answer is always no.
    """
    m = integer_break(f, digits)
    sweep = []
    for c in unit_classes(f.p, m):
        g = gu_family(f, c, digits)
        sweep.append((c, g, decide_with_oracle(f, g, digits)))
    witness = next(((g, o) for _, g, o in sweep if o.verdict is Verdict.DIFFERENT), None)
    return TBreakResult(witness is None, witness, tuple(sweep))
