"""Enumerate Eisenstein polynomials in a coefficient box and cluster them by field."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import NotGalois
from .extension import EisensteinPoly
from .identity import Verdict, decide, same_extension
from .padic import check_prime, format_val, sylvester_resultant, derivative, val_int
from .ramification import ramification_data


@dataclass(frozen=True)
class CensusConfig:
    p: int
    e: int
    B: int
    digits: int | None = None

    def __post_init__(self):
        check_prime(self.p)
        if self.e < 1:
            raise ValueError("degree must be positive")
        if self.B < 2:
            raise ValueError("coefficient box needs B >= 2")


@dataclass(frozen=True)
class CensusClass:
    representative: EisensteinPoly
    members: tuple
    galois: bool
    u_break: object  # Fraction or None
    disc_val: int

    @property
    def members_count(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "rep": list(self.representative.coeffs),
            "size": self.members_count,
            "galois": self.galois,
            "u_break": format_val(self.u_break) if self.u_break is not None else None,
            "disc_val": self.disc_val,
        }


class DisjointSet:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        """Merge the sets of x and y; the smaller root (in sort order) survives."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return rx

    def groups(self) -> dict:
        out = {}
        for x in sorted(self.parent):
            out.setdefault(self.find(x), []).append(x)
        return out


def _key(f: EisensteinPoly) -> tuple:
    return f.coeffs


def enumerate_polys(p: int, e: int, B: int) -> list[EisensteinPoly]:
    """All Eisenstein polynomials with coefficients in [0, p^B), sorted by (a_0, ..., a_{e-1})."""
    top = p**B
    a0 = [a for a in range(p, top, p) if a % (p * p)]
    rest = list(range(0, top, p))
    return [EisensteinPoly(p, (c0,) + tail) for c0 in a0 for tail in itertools.product(rest, repeat=e - 1)]


def disc_valuation(f: EisensteinPoly) -> int:
    return val_int(sylvester_resultant(f.poly, derivative(f.poly)), f.p)


def _galois_break(f: EisensteinPoly, digits):
    try:
        return ramification_data(f, digits).u_break
    except NotGalois:
        return None


def same_field(rep: EisensteinPoly, rep_break, g: EisensteinPoly, digits=None, stats=None) -> bool:
    """Distance criterion when it decides, root-finding oracle otherwise."""
    if rep_break is not None:
        verdict = decide(rep, g, digits).verdict
        if verdict is not Verdict.UNKNOWN:
            if stats is not None:
                stats["decided"] += 1
            return verdict is Verdict.SAME
    if stats is not None:
        stats["oracle"] += 1
    return same_extension(rep, g, digits) is not None


def cluster(polys, digits: int | None = None, use_decide: bool = True, stats: dict | None = None) -> list[CensusClass]:
    """Partition ``polys`` into isomorphism classes of the fields they define.

    Each polynomial is compared with the representative of every class found
    so far; the first Same verdict merges it.
    """
    polys = sorted(set(polys), key=_key)
    if polys and len({(f.p, f.e) for f in polys}) != 1:
        raise ValueError("census input must share p and e")
    ds = DisjointSet()
    reps = []  # (key, poly, u_break or None)
    for g in polys:
        k = _key(g)
        ds.find(k)
        for rk, rep, rb in reps:
            if same_field(rep, rb if use_decide else None, g, digits, stats):
                ds.union(rk, k)
                break
        else:
            reps.append((k, g, _galois_break(g, digits)))
    by_key = {_key(f): f for f in polys}
    classes = []
    for root, members in ds.groups().items():
        rep = by_key[root]
        u = _galois_break(rep, digits)
        classes.append(
            CensusClass(rep, tuple(by_key[m] for m in members), u is not None, u, disc_valuation(rep))
        )
    classes.sort(key=lambda c: _key(c.representative))
    return classes


def classes_within(classes, B: int) -> int:
    """Number of classes with a member whose coefficients all lie in [0, p^B)."""
    count = 0
    for c in classes:
        top = c.representative.p ** B
        if any(all(a < top for a in m.coeffs) for m in c.members):
            count += 1
    return count


def stabilization_point(classes, B: int):
    """Smallest B' < B whose sub-box already meets every class, or None."""
    total = len(classes)
    for b in range(2, B):
        if classes_within(classes, b) == total:
            return b
    return None


def census(config: CensusConfig) -> list[CensusClass]:
    return cluster(enumerate_polys(config.p, config.e, config.B), config.digits)


def census_report(p: int, e: int, B: int, digits: int | None = None) -> dict:
    classes = census(CensusConfig(p, e, B, digits))
    return {
        "p": p,
        "e": e,
        "B": B,
        "class_count": len(classes),
        "classes": [c.to_json() for c in classes],
        "stable_at_B": stabilization_point(classes, B),
    }


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True)
