from fractions import Fraction

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, settings
from hypothesis import strategies as st

from eisenram.errors import InsufficientPrecision, NonUnit, NotMonic
from eisenram.padic import (
    INF,
    AtLeast,
    TruncatedInt,
    det_bareiss,
    format_val,
    from_roots,
    mod_inverse,
    poly_eval,
    resultant,
    sylvester_resultant,
    val_int,
)

nonzero = st.integers(-(10**12), 10**12).filter(bool)
primes = st.sampled_from([2, 3, 5, 7])


@pytest.mark.parametrize(("n", "p", "v"), [(12, 2, 2), (0, 3, INF), (45, 3, 2), (-8, 2, 3), (7, 5, 0)])
def test_val_int(n, p, v):
    assert val_int(n, p) == v


@given(nonzero, nonzero, primes)
def test_val_int_multiplicative(a, b, p):
    assert val_int(a * b, p) == val_int(a, p) + val_int(b, p)


@given(nonzero, nonzero, primes)
def test_val_int_ultrametric(a, b, p):
    va, vb = val_int(a, p), val_int(b, p)
    assert val_int(a + b, p) >= min(va, vb)
    if va != vb:
        assert val_int(a + b, p) == min(va, vb)


def test_resultant_examples():
    assert resultant((-1, 1), (-2, 1)) == -1
    f = (-2, 0, 1)
    assert resultant(f, f) == 0
    assert resultant((-2, 0, 1), (-10, 0, 1)) == 64


def test_resultant_rejects_non_monic():
    with pytest.raises(NotMonic):
        resultant((1, 2), (-2, 0, 1))


def _product_over_roots(rf, rg):
    out = 1
    for a in rf:
        for b in rg:
            out *= a - b
    return out


roots = st.lists(st.integers(-20, 20), min_size=1, max_size=5)


@given(roots, roots)
def test_resultant_matches_product_over_roots(rf, rg):
    f, g = from_roots(rf), from_roots(rg)
    assert resultant(f, g) == _product_over_roots(rf, rg)
    # monic f: Res(f, g) = prod over roots of f of g(root)
    expected = 1
    for a in rf:
        expected *= poly_eval(g, a)
    assert resultant(f, g) == expected


monic = st.lists(st.integers(-50, 50), min_size=1, max_size=6).map(lambda c: tuple(c) + (1,))


@settings(max_examples=200)
@given(monic, monic)
def test_resultant_antisymmetry_and_sympy(f, g):
    m, n = len(f) - 1, len(g) - 1
    assert resultant(f, g) == (-1) ** (m * n) * resultant(g, f)
    # sympy.resultant flips the sign when deg f < deg g, so compare with the
    # determinant of sympy's own Sylvester matrix instead.
    x = sympy.Symbol("x")
    F = sympy.Poly(list(reversed(f)), x).as_expr()
    G = sympy.Poly(list(reversed(g)), x).as_expr()
    assert resultant(f, g) == int(sympy.Matrix(sylvester(F, G, x)).det())


def test_sylvester_resultant_non_monic_second_argument():
    # Res(x^2 - 2, 2x) = prod over roots of 2r = (2 sqrt2)(-2 sqrt2) = -8
    assert sylvester_resultant((-2, 0, 1), (0, 2)) == -8
    assert sylvester_resultant((-2, 0, 1), (5,)) == 25


def test_det_bareiss_with_pivoting():
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[2, 3, 1], [4, 6, 5], [1, 0, 7]]) == int(sympy.Matrix([[2, 3, 1], [4, 6, 5], [1, 0, 7]]).det())


def test_mod_inverse_examples():
    assert mod_inverse(TruncatedInt(3, 4, 2)).residue == 11
    assert mod_inverse(TruncatedInt(1, 10, 5)).residue == 1
    with pytest.raises(NonUnit):
        mod_inverse(TruncatedInt(2, 4, 2))
    with pytest.raises(InsufficientPrecision):
        mod_inverse(TruncatedInt(16, 4, 2))


@given(st.integers(1, 10**9).filter(lambda n: n % 3), st.integers(1, 12))
def test_mod_inverse_property(n, N):
    x = TruncatedInt(n, N, 3)
    assert (x * mod_inverse(x)).residue == 1


def test_truncated_zero_gives_certificate():
    z = TruncatedInt(81, 4, 3)
    v = z.valuation()
    assert v == AtLeast(4)
    assert v >= 3
    assert not (v < 4)
    with pytest.raises(InsufficientPrecision):
        v >= 5
    assert TruncatedInt(18, 4, 3).valuation() == 2


def test_truncated_product_precision():
    # (3 + O(3^5)) * (9 + O(3^5)) is known modulo 3^6
    x = TruncatedInt(3, 5, 3) * TruncatedInt(9, 5, 3)
    assert x.precision == 6
    assert x.residue == 27


def test_format_val():
    assert format_val(Fraction(5, 2)) == "5/2"
    assert format_val(3) == "3"
    assert format_val(INF) == "inf"
