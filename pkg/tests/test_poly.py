import itertools
import random

import pytest
from hypothesis import given, strategies as st

from frslab.gf import Field, FieldMismatchError
from frslab.poly import NEG_INF, Polynomial

F = Field(13)
X = Polynomial.x(F)


def P(*c):
    return Polynomial(c, F)


def test_eval_examples():
    assert X(F(5)) == 5
    assert Polynomial.zero(F)(F(7)) == 0
    assert (X * X + 1)(F(5)) == 0


def test_eval_cross_field():
    with pytest.raises(FieldMismatchError):
        X(Field(17)(1))


def test_zero_degree_sentinel():
    z = Polynomial.zero(F)
    assert z.degree == NEG_INF
    assert z.degree < 0
    assert P(0, 0, 0) == z and P(0, 0, 0).coeffs == ()


def test_ring_examples():
    assert (X + 1) * (X - 1) == P(12, 0, 1)
    assert divmod(X * X, X) == (X, Polynomial.zero(F))


def test_divmod_example_by_remultiplying():
    f, g = X * X + 1, X + 1
    quo, rem = divmod(f, g)
    assert quo * g + rem == f
    assert rem.degree < g.degree
    assert (quo, rem) == (P(12, 1), P(2))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(X, Polynomial.zero(F))


def test_from_roots_examples():
    assert Polynomial.from_roots([], F) == P(1)
    assert Polynomial.from_roots([0, 0], F) == X * X
    expanded = (X - 1) * (X - 2)
    assert Polynomial.from_roots([1, 2], F) == expanded == P(2, 10, 1)


def test_from_roots_vanishes_exactly_on_roots():
    rng = random.Random(5)
    for _ in range(50):
        roots = [rng.randrange(13) for _ in range(rng.randrange(6))]
        f = Polynomial.from_roots(roots, F)
        assert f.leading() == 1
        for x in range(13):
            assert (f.eval_int(x) == 0) == (x in roots)


def test_multiplicity():
    f = Polynomial.from_roots([3, 3, 3, 5], F)
    assert f.multiplicity(3) == 3
    assert f.multiplicity(5) == 1
    assert f.multiplicity(4) == 0
    with pytest.raises(ValueError):
        Polynomial.zero(F).multiplicity(1)


def test_scale_argument_matches_pointwise():
    f = P(3, 1, 4, 1, 5)
    g = f.scale_argument(7)
    for x in range(13):
        assert g.eval_int(x) == f.eval_int(7 * x % 13)


coeffs = st.lists(st.integers(0, 12), max_size=7)


@given(coeffs, coeffs)
def test_divmod_round_trip(a, b):
    f, g = Polynomial(a, F), Polynomial(b, F)
    if g.is_zero():
        return
    quo, rem = divmod(f, g)
    assert quo * g + rem == f
    assert rem.degree < g.degree


@given(coeffs, coeffs, coeffs)
def test_mul_commutative_associative(a, b, c):
    f, g, h = (Polynomial(v, F) for v in (a, b, c))
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    if not f.is_zero() and not g.is_zero():
        assert (f * g).degree == f.degree + g.degree


@given(coeffs, coeffs)
def test_eval_is_ring_homomorphism(a, b):
    f, g = Polynomial(a, F), Polynomial(b, F)
    for x in range(13):
        assert (f * g).eval_int(x) == f.eval_int(x) * g.eval_int(x) % 13
        assert (f + g).eval_int(x) == (f.eval_int(x) + g.eval_int(x)) % 13


def test_serialization_round_trip():
    f = P(1, 0, 5)
    assert f.to_list() == [1, 0, 5]
    assert Polynomial.from_list(f.to_list(), F) == f


def test_pow():
    assert (X + 1) ** 3 == (X + 1) * (X + 1) * (X + 1)
    assert (X + 1) ** 0 == P(1)
