from __future__ import annotations

from fractions import Fraction

import pytest
from conftest import nonzero_polys, polys, units
from hypothesis import given
from hypothesis import strategies as st

from lkforms.laurent import (
    ONE,
    ZERO,
    InexactDivisionError,
    LaurentPoly,
    PolyParseError,
    Q,
    T,
    ZeroPointError,
    parse_poly,
)

points = st.tuples(
    st.fractions(min_value=-5, max_value=5).filter(bool),
    st.fractions(min_value=-5, max_value=5).filter(bool),
)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a and a + ZERO == a


@given(polys, polys)
def test_bar_is_involutive_ring_map(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@given(polys, nonzero_polys)
def test_exact_division_recovers_factor(a, d):
    assert (a * d).exact_div(d) == a


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        (T + 2).exact_div(T + 1)
    with pytest.raises(ZeroDivisionError):
        T.exact_div(ZERO)


@given(polys, polys)
def test_leibniz_rule(a, b):
    for v in "tq":
        assert (a * b).partial(v) == a.partial(v) * b + a * b.partial(v)


@given(polys, polys, points)
def test_evaluation_is_homomorphism(a, b, pt):
    assert (a * b).eval(*pt) == a.eval(*pt) * b.eval(*pt)
    assert (a + b).eval(*pt) == a.eval(*pt) + b.eval(*pt)
    assert a.bar().eval(*pt) == a.eval(1 / pt[0], 1 / pt[1])


def test_eval_rejects_zero_and_is_exact():
    with pytest.raises(ZeroPointError):
        T.inv().eval(0, 1)
    assert (T.inv() + Q).eval(2, 3) == Fraction(7, 2)


@given(polys)
def test_parse_round_trip(a):
    assert parse_poly(str(a)) == a
    assert LaurentPoly.parse(str(a)) == a


def test_string_format():
    assert str(ZERO) == "0"
    assert str(-T * Q**2 + 1) == "1*t^0*q^0 + -1*t^1*q^2"
    assert parse_poly("t^-1 + 3*q") == T.inv() + 3 * Q
    assert parse_poly("-q*t*2") == -2 * T * Q
    for bad in ["t^^2", "", "1 + ", "x"]:
        with pytest.raises(PolyParseError):
            parse_poly(bad)


@given(nonzero_polys, units)
def test_normalization_absorbs_units(a, u):
    p1, u1 = a.normalize_up_to_units()
    p2, u2 = (a * u).normalize_up_to_units()
    assert p1 == p2
    assert p1 * u1.to_poly() == a


@given(units)
def test_units_invert(u):
    assert u.is_unit()
    assert u * u.inv() == ONE
    assert u ** -2 == (u * u).inv()


def test_non_unit_has_no_inverse():
    with pytest.raises(ArithmeticError):
        (1 + T).inv()


def test_substitute_q_one_and_exponents():
    p = T * Q**-2 - 3 * T + Q
    assert p.substitute_q_one() == 1 - 2 * T
    assert p.min_exponents() == (0, -2)
    assert p.max_exponents() == (1, 1)
    assert p.has_q() and not (1 + T).has_q()
