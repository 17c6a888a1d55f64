import math

import pytest
from hypothesis import given, strategies as st

from imocheck.errors import ZeroDenominatorError
from imocheck.rational import (Rational, ZERO, ONE, add, compare, div, finite_sum,
                               make_rational, mul, neg, render)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=99)
nonzero_rationals = rationals.filter(lambda q: q != 0)


def test_make_canonical():
    assert make_rational(1, 2) == Rational(1, 2)
    assert make_rational(2, -4) == Rational(-1, 2)
    assert make_rational(0, 7) == Rational(0, 1)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDenominatorError):
        make_rational(1, 0)
    # also usable as the builtin category
    with pytest.raises(ZeroDivisionError):
        make_rational(3, 0)


@given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30).filter(bool))
def test_canonical_invariants(num, den):
    q = make_rational(num, den)
    assert q.denominator > 0
    assert math.gcd(abs(q.numerator), q.denominator) == 1
    assert q * den == num


def test_arithmetic_examples():
    assert add(make_rational(1, 4), make_rational(-1, 3)) == make_rational(-1, 12)
    assert mul(make_rational(1, 2), ZERO) == ZERO
    assert div(make_rational(1, 6), make_rational(1, 6)) == ONE
    assert neg(make_rational(3, 5)) == make_rational(-3, 5)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        div(ONE, ZERO)


def test_compare_total_order():
    assert compare(make_rational(1, 3), make_rational(1, 2)) == -1
    assert compare(make_rational(1, 2), make_rational(1, 2)) == 0
    assert compare(make_rational(-1, 2), make_rational(-2, 3)) == 1


@given(rationals, rationals)
def test_compare_matches_real_order(a, b):
    assert compare(a, b) == (a > b) - (a < b)


def test_render_always_shows_denominator():
    assert render(make_rational(-1, 1)) == "-1/1"
    assert render(make_rational(1, 12)) == "1/12"
    assert render(ZERO) == "0/1"


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == ZERO


@given(nonzero_rationals)
def test_multiplicative_inverse(a):
    assert a * (ONE / a) == ONE


def test_finite_sum_examples():
    assert finite_sum(lambda k: ONE, 0, 3) == Rational(3)
    assert finite_sum(lambda k: make_rational(k, 1), 5, 5) == ZERO
    assert finite_sum(lambda k: make_rational(1, k + 1), 0, 2) == make_rational(3, 2)


@given(st.lists(rationals, min_size=1, max_size=12))
def test_sum_reindex(fs):
    n = len(fs)
    f = fs.__getitem__
    assert finite_sum(lambda i: f(n - 1 - i), 0, n) == finite_sum(f, 0, n)


@given(st.lists(rationals, min_size=1, max_size=12))
def test_sum_remove_zero(fs):
    n = len(fs)
    f = fs.__getitem__
    assert finite_sum(f, 0, n) == f(0) + finite_sum(f, 1, n)


@given(st.lists(rationals, min_size=1, max_size=12), rationals)
def test_sum_distrib_left(fs, r):
    n = len(fs)
    f = fs.__getitem__
    assert r * finite_sum(f, 0, n) == finite_sum(lambda i: r * f(i), 0, n)


@given(st.lists(st.tuples(rationals, rationals), min_size=1, max_size=12))
def test_sum_subtract_and_negate(pairs):
    n = len(pairs)
    f = lambda i: pairs[i][0]
    g = lambda i: pairs[i][1]
    assert (finite_sum(lambda i: f(i) - g(i), 0, n)
            == finite_sum(f, 0, n) - finite_sum(g, 0, n))
    assert finite_sum(lambda i: -f(i), 0, n) == -finite_sum(f, 0, n)
