"""Tagged ring elements, gcd certificates and the Z / Q[x] instances."""

import random

import pytest

from bezout_snf.errors import NotDivisibleError, ParseError, PreconditionError, RingMismatchError
from bezout_snf.numeric import Rational
from bezout_snf.rings import (
    QX,
    H,
    RingId,
    Z,
    associates,
    canonical,
    coprime,
    divides,
    embed,
    exact_div,
    gcd_many,
    is_unit,
    parse_element,
    ring_id,
    xgcd,
)
from helpers import RINGS, rand_element


def test_xgcd_integer_example():
    cert = xgcd(Z(12), Z(18))
    assert (cert.g, cert.u, cert.v) == (6, -1, 1)
    assert cert.a * cert.u + cert.b * cert.v == cert.g
    assert (cert.a1, cert.b1) == (2, 3)


def test_xgcd_ratpoly_example():
    cert = xgcd(QX("x^2 - 1"), QX("x^2 + 2*x + 1"))
    assert cert.g == QX("x + 1")
    assert cert.is_valid()


def test_xgcd_zero_zero():
    cert = xgcd(Z(0), Z(0))
    assert all(getattr(cert, f) == 0 for f in ("g", "u", "v", "a1", "b1"))
    assert cert.is_valid()


@pytest.mark.parametrize("ring", RINGS)
def test_xgcd_with_one_zero_argument(ring):
    rng = random.Random(21)
    for _ in range(50):
        a = rand_element(ring, rng)
        for cert in (xgcd(a, embed(ring, 0)), xgcd(embed(ring, 0), a)):
            assert cert.is_valid()
            assert associates(cert.g, a)


def test_gcd_many_examples():
    g, coeffs = gcd_many([Z(6), Z(10), Z(15)])
    assert g == 1
    assert sum((c * v for c, v in zip(coeffs, [Z(6), Z(10), Z(15)])), Z(0)) == 1
    vals = [H("x"), H("3"), H("1 + x")]
    g, coeffs = gcd_many(vals)
    assert g == 1
    assert sum((c * v for c, v in zip(coeffs, vals)), H(0)) == 1
    assert gcd_many([Z(4), Z(6)])[0] == 2


def test_gcd_many_errors():
    with pytest.raises(PreconditionError):
        gcd_many([])
    with pytest.raises(RingMismatchError):
        gcd_many([Z(1), QX("x")])


@pytest.mark.parametrize("ring", RINGS)
def test_gcd_many_identity(ring):
    rng = random.Random(22)
    for size in (3, 4):
        for _ in range(100):
            vals = [rand_element(ring, rng, int_bound=1000, max_deg=3) for _ in range(size)]
            g, coeffs = gcd_many(vals)
            assert sum((c * v for c, v in zip(coeffs, vals)), embed(ring, 0)) == g
            assert canonical(g) == g
            assert all(divides(g, v) for v in vals)


def test_divides_examples():
    assert divides(H(2), H("x"))
    assert not divides(H("x"), H("1/2*x"))
    assert divides(Z(5), Z(0))
    assert not divides(Z(0), Z(5))
    assert divides(Z(0), Z(0))


def test_exact_div_examples():
    assert exact_div(H("6 + 3*x"), H(3)) == H("2 + x")
    assert exact_div(QX("x^2 - 1"), QX("x - 1")) == QX("x + 1")
    with pytest.raises(NotDivisibleError):
        exact_div(Z(7), Z(2))
    with pytest.raises(ZeroDivisionError):
        exact_div(Z(7), Z(0))


def test_is_unit_examples():
    assert is_unit(QX("2/3"))
    assert not is_unit(H("1 + 1/2*x"))
    assert is_unit(Z(-1))
    assert not is_unit(Z(0))
    assert not is_unit(QX("0"))
    assert not is_unit(H(2))


def test_canonical_examples():
    assert canonical(Z(-6)) == 6
    assert canonical(QX("2*x + 2")) == QX("x + 1")
    assert canonical(H("-2 - x")) == H("2 + x")
    assert canonical(H("-1/2*x + x^2")) == H("1/2*x - x^2")


def test_coprime_examples():
    assert coprime(H("x"), H("1 + x"))
    assert not coprime(H("x"), H(2))
    assert coprime(Z(4), Z(9))


@pytest.mark.parametrize("ring", RINGS)
def test_certificate_validity_random(ring):
    rng = random.Random(23)
    for _ in range(1000):
        cert = xgcd(rand_element(ring, rng), rand_element(ring, rng))
        assert cert.failures() == []


@pytest.mark.parametrize("ring", RINGS)
def test_gcd_maximality_against_probes(ring):
    rng = random.Random(24)
    for _ in range(200):
        probe = rand_element(ring, rng, int_bound=50, max_deg=2, cap=6)
        if probe.is_zero():
            continue
        a = probe * rand_element(ring, rng, int_bound=1000, max_deg=2, cap=6)
        b = probe * rand_element(ring, rng, int_bound=1000, max_deg=2, cap=6)
        assert divides(probe, xgcd(a, b).g)


@pytest.mark.parametrize("ring", RINGS)
def test_canonical_idempotent_and_unit_invariant(ring):
    rng = random.Random(25)
    units = [embed(ring, 1), embed(ring, -1)]
    for _ in range(300):
        a = rand_element(ring, rng)
        c = canonical(a)
        assert canonical(c) == c
        assert divides(a, c) and divides(c, a)
        extra = [QX(str(Rational(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice([1, -1])))] if ring is RingId.RATPOLY else []
        for w in units + extra:
            assert canonical(w * a) == c


def test_cross_ring_rejected():
    with pytest.raises(RingMismatchError):
        Z(1) + QX("1")
    with pytest.raises(RingMismatchError):
        xgcd(H("x"), QX("x"))


def test_henriksen_constructor_rejects_fraction_constant():
    with pytest.raises(ParseError):
        H("1/2")
    with pytest.raises(ParseError):
        H("1/2 + x")


def test_parse_element_examples():
    assert parse_element("henriksen", "2 + 1/2*x") == H("2 + 1/2*x")
    assert parse_element("integers", "−12") == -12
    with pytest.raises(ParseError):
        parse_element("henriksen", "1/2")
    with pytest.raises(ParseError):
        ring_id("reals")


def test_element_strings():
    assert str(H("2 + 1/2*x")) == "2 + 1/2*x"
    assert str(Z(-3)) == "-3"
    assert str(QX("0")) == "0"
