"""Exact rational and polynomial arithmetic, plus the element grammar."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bezout_snf.errors import ParseError
from bezout_snf.numeric import (
    Rational,
    RatPoly,
    format_poly,
    format_rational,
    int_xgcd,
    parse_integer,
    parse_poly,
    parse_rational,
    poly_divrem,
    poly_xgcd_field,
    rat_arith,
    rational_pair_gcd,
)
from helpers import rand_ratpoly, rand_rational

X = RatPoly.X


def P(*coeffs):
    return RatPoly(list(coeffs))


# --- rationals --------------------------------------------------------------


def test_rat_arith_examples():
    assert rat_arith("add", Rational(1, 2), Rational(1, 3)) == Rational(5, 6)
    assert rat_arith("mul", Rational(2, 4), 2) == 1
    with pytest.raises(ZeroDivisionError):
        rat_arith("div", 1, 0)


def test_rat_arith_canonical_form():
    rng = random.Random(11)
    for _ in range(10_000):
        a, b = rand_rational(rng, 100), rand_rational(rng, 100)
        op = rng.choice(["add", "sub", "mul", "div"])
        if op == "div" and b == 0:
            continue
        r = rat_arith(op, a, b)
        assert r.denominator > 0
        assert Fraction(int(r.numerator), int(r.denominator)) == Fraction(r)
        assert abs(Fraction(r).denominator) == int(r.denominator)


def test_rational_is_exact_at_large_magnitude():
    big = Rational(10**60 + 1, 3)
    assert big * 3 - 1 == 10**60


def test_int_xgcd_examples():
    assert int_xgcd(12, 18) == (6, -1, 1)
    assert int_xgcd(0, 0)[0] == 0
    g, u, v = int_xgcd(-4, 6)
    assert g == 2 and -4 * u + 6 * v == 2


# --- polynomials ------------------------------------------------------------


def test_zero_polynomial_has_no_degree():
    assert RatPoly().degree is None
    assert RatPoly([0, 0]).is_zero()
    assert RatPoly([0, 0]).coeffs == ()


def test_poly_divrem_examples():
    assert poly_divrem(X * X - 1, X + 1) == (X - 1, RatPoly())
    assert poly_divrem(X * X + 1, X) == (X, RatPoly.const(1))
    assert poly_divrem(X, X * X) == (RatPoly(), X)
    with pytest.raises(ZeroDivisionError):
        poly_divrem(X, RatPoly())


def test_poly_divrem_round_trip():
    rng = random.Random(12)
    for _ in range(500):
        f, g = rand_ratpoly(rng, 8), rand_ratpoly(rng, 8)
        if g.is_zero():
            continue
        q, r = poly_divrem(f, g)
        assert q * g + r == f
        assert r.is_zero() or r.degree < g.degree


def test_poly_xgcd_field_examples():
    f, g = X * X - 1, X * X + 2 * X + 1
    h, alpha, beta = poly_xgcd_field(f, g)
    assert h == X + 1
    assert (alpha, beta) == (RatPoly.const(Rational(-1, 2)), RatPoly.const(Rational(1, 2)))
    assert alpha * f + beta * g == h
    f = P(2, 0, 4)
    assert poly_xgcd_field(f, RatPoly()) == (f.monic(), RatPoly.const(Rational(1, 4)), RatPoly())
    assert poly_xgcd_field(RatPoly(), RatPoly()) == (RatPoly(), RatPoly(), RatPoly())


def test_poly_xgcd_field_identity_and_division():
    rng = random.Random(13)
    for _ in range(500):
        common = rand_ratpoly(rng, 2)
        f, g = rand_ratpoly(rng, 4) * common, rand_ratpoly(rng, 4) * common
        h, alpha, beta = poly_xgcd_field(f, g)
        assert alpha * f + beta * g == h
        if h.is_zero():
            assert f.is_zero() and g.is_zero()
            continue
        assert h.lead == 1
        assert poly_divrem(f, h)[1].is_zero() and poly_divrem(g, h)[1].is_zero()


def test_rational_pair_gcd_examples():
    assert rational_pair_gcd(Rational(1, 2), Rational(3, 4)) == (Rational(1, 4), -1, 1)
    assert rational_pair_gcd(1, Rational(1, 2)) == (Rational(1, 2), 0, 1)
    assert rational_pair_gcd(5, 0) == (5, 1, 0)
    with pytest.raises(ZeroDivisionError):
        rational_pair_gcd(0, 0)


def test_rational_pair_gcd_properties():
    rng = random.Random(14)
    for _ in range(10_000):
        r, s = rand_rational(rng, 100), rand_rational(rng, 100)
        if r == 0 and s == 0:
            continue
        q, u, v = rational_pair_gcd(r, s)
        assert u * r + v * s == q
        assert (r / q).denominator == 1 and (s / q).denominator == 1


@settings(max_examples=200, deadline=None)
@given(
    st.fractions(max_denominator=50).filter(lambda f: abs(f.numerator) < 10**6),
    st.fractions(max_denominator=50).filter(lambda f: abs(f.numerator) < 10**6),
    st.integers(1, 60),
    st.integers(1, 60),
)
def test_rational_pair_gcd_is_greatest(r, s, num, den):
    if r == 0 and s == 0:
        return
    q, _, _ = rational_pair_gcd(r, s)
    assert q > 0
    t = Fraction(num, den)
    if (r / t).denominator == 1 and (s / t).denominator == 1:
        assert (Fraction(q) / t).denominator == 1


def test_poly_helpers():
    p = P(0, 0, 3, Rational(1, 2))
    assert p.x_valuation() == 2
    assert p.strip_x() == (2, P(3, Rational(1, 2)))
    assert p.lowest_coeff() == 3
    assert p(2) == 16
    assert (X + 1) ** 3 == P(1, 3, 3, 1)


# --- grammar ----------------------------------------------------------------


def test_parse_examples():
    assert parse_poly("2 + 1/2*x + 7*x^2") == P(2, Rational(1, 2), 7)
    assert parse_poly("x^2 - x") == P(0, -1, 1)
    assert parse_poly("7*x^2 + 2") == P(2, 0, 7)
    assert parse_poly("−3*x") == P(0, -3)
    assert parse_integer("−12") == -12
    assert parse_rational("-6/4") == Rational(-3, 2)


@pytest.mark.parametrize("text", ["", "2 +", "x^", "1/0", "3**x", "2 3", "y", "1/2/3", "x^-1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse_poly("1 + 2*y")
    assert info.value.position == 6


def test_parse_integer_rejects_fractions():
    with pytest.raises(ParseError):
        parse_integer("1/2")


def test_format_examples():
    assert format_poly(P(2, Rational(1, 2), -7)) == "2 + 1/2*x - 7*x^2"
    assert format_poly(P(0, 1)) == "x"
    assert format_poly(P(0, -1)) == "-x"
    assert format_poly(RatPoly()) == "0"
    assert format_rational(Rational(-3, 6)) == "-1/2"


def test_format_parse_round_trip():
    rng = random.Random(15)
    for _ in range(500):
        p = rand_ratpoly(rng, 6)
        assert parse_poly(format_poly(p)) == p
