import random

import pytest
from hypothesis import strategies as st

from eisenram.extension import EisensteinPoly

X2_2 = EisensteinPoly(2, (-2, 0))  # x^2 - 2 over Q_2
X2_3 = EisensteinPoly(3, (-3, 0))  # x^2 - 3 over Q_3
X2_3X_3 = EisensteinPoly(3, (3, 3))  # x^2 + 3x + 3 over Q_3
ZETA8 = EisensteinPoly(2, (2, 4, 6, 4))  # Phi_8(x + 1)
ZETA9_PLUS = EisensteinPoly(3, (3, 0, -3))  # x^3 - 3x + 1 at x = y - 1: cyclic cubic inside Q_3(zeta_9)
CUBE_ROOT_7 = EisensteinPoly(7, (-7, 0, 0))


def random_eisenstein(rng: random.Random, p: int, e: int, bound: int) -> EisensteinPoly:
    """Coefficients drawn from [0, bound), conditioned on the Eisenstein shape."""
    while True:
        a0 = rng.randrange(1, bound // p) * p
        if a0 % (p * p):
            break
    rest = tuple(rng.randrange(bound // p) * p for _ in range(e - 1))
    return EisensteinPoly(p, (a0,) + rest)


@st.composite
def eisenstein(draw, p=None, e=None, digits=6):
    p = draw(st.sampled_from([2, 3, 5])) if p is None else p
    e = draw(st.sampled_from([2, 3, 4, 6])) if e is None else e
    top = p**digits
    unit = draw(st.integers(1, top // p - 1).filter(lambda u: u % p))
    rest = draw(st.lists(st.integers(0, top // p - 1), min_size=e - 1, max_size=e - 1))
    return EisensteinPoly(p, (p * unit,) + tuple(p * r for r in rest))


@pytest.fixture
def rng():
    return random.Random(20261018)
