"""The ultrametric on Eisenstein polynomials and the resultant metric on P_K."""
from __future__ import annotations

from fractions import Fraction

from .errors import DegreeMismatch, InconsistentResult, PrimeMismatch
from .extension import EisensteinPoly
from .padic import INF, resultant, val_int


def check_pair(f: EisensteinPoly, g: EisensteinPoly):
    if f.p != g.p:
        raise PrimeMismatch(f"primes differ: {f.p} and {g.p}")
    if f.e != g.e:
        raise DegreeMismatch(f"degrees differ: {f.e} and {g.e}")


def coefficient_distance(f: EisensteinPoly, g: EisensteinPoly):
    """min_i v_p(a_i - b_i) + i/e, the O(e) formula."""
    check_pair(f, g)
    e = f.e
    return min(val_int(a - b, f.p) + Fraction(i, e) for i, (a, b) in enumerate(zip(f.coeffs, g.coeffs)))


def resultant_distance(f: EisensteinPoly, g: EisensteinPoly):
    """v_p(Res(f, g)) / e."""
    check_pair(f, g)
    v = val_int(resultant(f.poly, g.poly), f.p)
    return v if v == INF else Fraction(v, f.e)


def distance_E(f: EisensteinPoly, g: EisensteinPoly, verify: bool = __debug__):
    """Distance between two Eisenstein polynomials of equal degree.

    With ``verify`` the resultant route also runs and must agree exactly.
    """
    d = coefficient_distance(f, g)
    if verify:
        r = resultant_distance(f, g)
        if r != d:
            raise InconsistentResult(f"coefficient distance {d} != resultant distance {r} for {f}, {g}")
    return d


def distance_P(f, g, p: int):
    """v_p(Res(f, g)) for monic polynomials; irreducibility is the caller's claim."""
    return val_int(resultant(f, g), p)
