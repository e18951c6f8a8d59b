import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eisenram.errors import InsufficientPrecision, MixedExtensions, NotEisenstein, NotGalois
from eisenram.extension import (
    EisensteinPoly,
    Ring,
    conjugates,
    ext_arith,
    ext_val,
    galois_check,
    has_root,
    make_eisenstein,
    norm,
    roots_of,
)
from eisenram.padic import derivative, poly_eval, resultant, sylvester_resultant, val_int

from conftest import CUBE_ROOT_7, X2_2, X2_3, X2_3X_3, ZETA8, eisenstein

Q3_SQRT3 = Ring(X2_3, 20)


def test_make_eisenstein():
    assert make_eisenstein((-2, 0, 1), 2) == X2_2
    with pytest.raises(NotEisenstein) as err:
        make_eisenstein((-4, 0, 1), 2)
    assert err.value.index == 0
    with pytest.raises(NotEisenstein) as err:
        make_eisenstein((-2, 1, 1), 2)
    assert err.value.index == 1


def test_arith_examples():
    r = Q3_SQRT3
    pi = r.pi
    assert ext_arith(pi, pi, "mul") == r.scalar(3)
    assert ext_arith(1 + pi, 1 - pi, "mul") == r.scalar(-2)
    x = r.element((5, 7))
    assert ext_arith(x, r.zero, "add") == x


def test_mixed_extensions_rejected():
    with pytest.raises(MixedExtensions):
        Q3_SQRT3.pi + Ring(X2_3X_3, 10).pi


def test_ext_val_examples():
    r = Q3_SQRT3
    assert ext_val(r.pi) == Fraction(1, 2)
    assert ext_val(r.scalar(3)) == 1
    assert ext_val(r.scalar(3) + r.pi) == Fraction(1, 2)
    with pytest.raises(InsufficientPrecision):
        ext_val(r.zero)


def _random_element(ring, rng, low=0):
    coords = tuple(rng.randrange(ring.p**6) for _ in range(ring.e))
    return (ring.element(coords) * ring.pi**low).exact()


@settings(max_examples=60, deadline=None)
@given(eisenstein(digits=4), st.randoms(use_true_random=False))
def test_ext_val_is_a_valuation(f, rnd):
    ring = Ring(f, 12)
    x = _random_element(ring, rnd, rnd.randrange(4))
    y = _random_element(ring, rnd, rnd.randrange(4))
    if x.is_zero() or y.is_zero():
        return
    assert ext_val(x * y) == ext_val(x) + ext_val(y)
    s = x + y
    if not s.is_zero():
        assert ext_val(s) >= min(ext_val(x), ext_val(y))


def test_division_and_inverse():
    r = Ring(ZETA8, 16)
    u = r.element((3, 2, 1, 5))
    assert (u * u.unit_inverse() - 1).is_zero()
    x = r.pi**3 * u
    assert x / u.exact() == r.pi**3


def _close(a, b, prec):
    return (a - b).val_bound() >= prec


def test_roots_examples():
    found = roots_of((-4, 0, 1), X2_3, prec=10)
    ring = found[0].ring
    assert sorted(r.coords for r in found) == sorted(ring.scalar(c).coords for c in (2, -2))

    found = roots_of(X2_3.poly, X2_3, prec=10)
    pi = found[0].ring.pi
    assert len(found) == 2
    assert any(_close(r, pi, 20) for r in found)
    assert any(_close(r, -pi, 20) for r in found)

    assert roots_of((-2, 0, 1), X2_3, prec=10) == []


def _brute_solutions(h, f, k):
    """Residues x mod pi^k (x = sum c_i pi^i, 0 <= c_i < p) with h(x) = 0 mod pi^k."""
    ring = Ring(f, k + 4)
    p = f.p
    sols = []
    for digits in itertools.product(range(p), repeat=k):
        x = ring.zero
        for j, d in enumerate(digits):
            if d:
                x = x + ring.pi**j * d
        if ring.evaluate(h, x.exact()).val_bound() >= k:
            sols.append(x)
    return sols


def test_no_root_confirmed_by_exhaustion():
    # x^2 - 2 has no solution modulo pi in Q_3(sqrt 3), so no root at all
    assert _brute_solutions((-2, 0, 1), X2_3, 3) == []


@pytest.mark.parametrize(
    ("h", "f"),
    [
        ((-2, 0, 1), X2_2),
        ((2, 2, 1), X2_2),
        ((-3, 0, 1), X2_3X_3),
        ((-7, 0, 0, 1), CUBE_ROOT_7),
        ((3, 0, 0, 1), EisensteinPoly(3, (3, 0, 0))),
        ((-2, 0, 1), EisensteinPoly(2, (-10, 0))),
    ],
)
def test_roots_agree_with_brute_force(h, f):
    k = max(j for j in range(1, 7) if f.p**j <= 800)
    brute = _brute_solutions(h, f, k)
    found = roots_of(h, f, prec=8)
    # every root reduces to a solution mod pi^k
    for r in found:
        assert any(_close(r, s, k) for s in brute)
    if not brute:
        assert not found


@settings(max_examples=40, deadline=None)
@given(eisenstein(digits=4))
def test_roots_satisfy_h(f):
    ring = Ring(f, 20)
    for r in roots_of(f.poly, ring):
        assert ring.evaluate(f.poly, r).val_bound() >= r.prec
        assert r.prec >= f.e * 10


def test_norm_examples():
    r = Q3_SQRT3
    assert norm(r.pi) == -3
    assert norm(1 + r.pi) == -2
    for c in (2, 5, 9):
        assert norm(r.scalar(c)) == c**2
    f = ZETA8
    assert norm(Ring(f, 10).pi) == (-1) ** f.e * f.coeffs[0]


def _product_over_conjugates(x, conj):
    ring = x.ring
    out = ring.one
    for s in conj:
        out = out * ring.evaluate(x.coords, s)
    return out


def test_norm_matches_product_over_conjugates():
    rng = random.Random(5)
    for f in (X2_2, ZETA8, CUBE_ROOT_7):
        conj = conjugates(f, 24)
        ring = conj[0].ring
        for _ in range(10):
            x = _random_element(ring, rng)
            n = norm(x)
            prod = _product_over_conjugates(x, conj)
            assert _close(prod, ring.scalar(n.lift()), min(prod.prec, ring.e * n.precision))


@settings(max_examples=60, deadline=None)
@given(eisenstein(digits=4), st.randoms(use_true_random=False))
def test_norm_is_multiplicative(f, rnd):
    ring = Ring(f, 12)
    x = _random_element(ring, rnd, rnd.randrange(3))
    y = _random_element(ring, rnd, rnd.randrange(3))
    assert norm(x * y) == norm(x) * norm(y)


def test_galois_examples():
    res = galois_check(X2_2, 20)
    assert res.galois and res.root_count == 2
    pi = res.conjugates[0].ring.pi
    assert _close(res.conjugates[0], pi, 20) and _close(res.conjugates[1], -pi, 20)
    res = galois_check(EisensteinPoly(3, (-3, 0, 0)))
    assert not res.galois and res.root_count == 1
    with pytest.raises(NotGalois) as err:
        conjugates(EisensteinPoly(3, (-3, 0, 0)))
    assert err.value.root_count == 1
    assert galois_check(X2_3X_3).galois


def _is_square_qp(n, p):
    """Independent square test for a nonzero integer in Q_p."""
    v = val_int(n, p)
    if v % 2:
        return False
    u = n // p**v
    if p == 2:
        return u % 8 == 1
    return pow(u % p, (p - 1) // 2, p) == 1


@settings(max_examples=40, deadline=None)
@given(eisenstein(p=None, e=3, digits=3))
def test_cubic_galois_iff_discriminant_square(f):
    # an irreducible cubic is Galois iff its discriminant is a square
    disc = -sylvester_resultant(f.poly, derivative(f.poly))
    assert galois_check(f, 48).galois == _is_square_qp(disc, f.p)


def test_conjugates_are_roots():
    for f in (X2_2, ZETA8, CUBE_ROOT_7, X2_3X_3):
        conj = conjugates(f)
        ring = conj[0].ring
        assert len(conj) == f.e
        for s in conj:
            assert ring.evaluate(f.poly, s).val_bound() >= s.prec


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_substitution_matches_resultant(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    e = data.draw(st.sampled_from([2, 3, 4]))
    f = data.draw(eisenstein(p=p, e=e, digits=5))
    g = data.draw(eisenstein(p=p, e=e, digits=5))
    if f == g:
        return
    ring = Ring(g, 12)
    value = ring.evaluate(f.poly, ring.pi)
    assert ext_val(value) == Fraction(val_int(resultant(f.poly, g.poly), p), e)


def test_has_root():
    assert has_root((-4, 0, 1), X2_3) is not None
    assert has_root((-2, 0, 1), X2_3) is None
