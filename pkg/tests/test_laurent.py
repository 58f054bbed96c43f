from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kla2.laurent import LPoly, ONE, V, ZERO, ZeroPolynomialError, monomial

polys = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=6).map(LPoly)


def ev(p: LPoly, t: Fraction) -> Fraction:
    return sum((Fraction(a) * t**k for k, a in p.items()), Fraction(0))


POINTS = [Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 7)]


def test_examples():
    vinv = V.bar()
    assert (V + vinv) * V == LPoly({2: 1, 0: 1})
    assert V + (-V) == ZERO
    assert monomial(1, 2) * monomial(3, -2) == 3
    assert V.bar() == LPoly({-1: 1})
    assert (V**2 + 1).bar() == LPoly({-2: 1, 0: 1})
    assert (V**2 + 1).eval_at_one() == 2
    assert (V**3 + V).coeff(1) == 1
    assert not (V - 1).is_nonneg()


def test_zero_degree_signals():
    with pytest.raises(ZeroPolynomialError):
        ZERO.min_deg()
    with pytest.raises(ZeroPolynomialError):
        ZERO.max_deg()


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert a - a == ZERO


@given(polys, polys)
def test_matches_evaluation_oracle(a, b):
    # evaluation at a point is a ring map, so it checks sums and products independently
    for t in POINTS:
        assert ev(a + b, t) == ev(a, t) + ev(b, t)
        assert ev(a * b, t) == ev(a, t) * ev(b, t)
        assert ev(a.bar(), t) == ev(a, 1 / t)
        assert ev(a.shift(3), t) == ev(a, t) * t**3


@given(polys, polys)
def test_bar_and_eval_are_ring_maps(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert a.bar().bar() == a
    assert (a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one()
    assert (a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one()


@given(polys)
def test_text_and_json_roundtrip(a):
    assert LPoly.parse(str(a)) == a
    assert LPoly.from_json(a.to_json()) == a
    assert hash(LPoly.parse(str(a))) == hash(a)


def test_parse_forms():
    assert LPoly.parse("v^-2 + 3 + v^2") == LPoly({-2: 1, 0: 3, 2: 1})
    assert LPoly.parse("-2*v + 1") == LPoly({1: -2, 0: 1})
    assert str(LPoly({1: -2})) == "-2*v"
    with pytest.raises(ValueError):
        LPoly.parse("v v")


def test_powers():
    assert V**0 == ONE
    assert V**-2 == LPoly({-2: 1})
    assert (V + 1) ** 3 == LPoly({0: 1, 1: 3, 2: 3, 3: 1})
    with pytest.raises(ValueError):
        (V + 1) ** -1


def test_big_integers_do_not_overflow():
    big = monomial(10**30, 1)
    assert (big * big).coeff(2) == 10**60
