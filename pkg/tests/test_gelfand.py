"""Gelfand predicate, shift and factorization."""

import random

import pytest

from bezout_snf.errors import NotCoprimeError, PreconditionError, ShiftNotFoundError, StabilizationError
from bezout_snf.gelfand import gelfand_factor, gelfand_shift, is_gelfand
from bezout_snf.rings import QX, H, RingId, Z, coprime, embed
from helpers import RINGS, rand_element, rand_unimodular_triple


def test_is_gelfand_examples():
    assert is_gelfand(Z(6))
    assert not is_gelfand(Z(0))
    assert not is_gelfand(H("x"))
    assert is_gelfand(H("2 + x"))
    assert is_gelfand(QX("x^2"))
    assert not is_gelfand(QX("0"))


@pytest.mark.parametrize("ring", RINGS)
def test_units_are_gelfand(ring):
    for u in (1, -1):
        assert is_gelfand(embed(ring, u))
    if ring is RingId.RATPOLY:
        assert is_gelfand(QX("-2/7"))


def test_shift_examples():
    res = gelfand_shift(H("x"), H("1 + x"))
    assert (res.t, res.d) == (H(1), H("1 + 2*x"))
    res = gelfand_shift(H("2 + x"), H(5))
    assert (res.t, res.d) == (H(0), H("2 + x"))
    res = gelfand_shift(Z(3), Z(5))
    assert (res.t, res.d) == (0, 3)


def test_shift_requires_coprime_pair():
    with pytest.raises(NotCoprimeError):
        gelfand_shift(H("x"), H(2))


def test_shift_moves_off_zero():
    assert gelfand_shift(Z(0), Z(1)).t == 1
    assert gelfand_shift(H(0), H(-1)).d == H(-1)


def test_internal_failures_are_not_precondition_errors():
    assert not issubclass(ShiftNotFoundError, PreconditionError)
    assert not issubclass(StabilizationError, PreconditionError)


@pytest.mark.parametrize("ring", RINGS)
def test_shift_totality(ring):
    rng = random.Random(41)
    done = 0
    while done < 1000:
        a = rand_element(ring, rng, int_bound=100, max_deg=3, cap=10)
        b = rand_element(ring, rng, int_bound=100, max_deg=3, cap=10)
        if not coprime(a, b):
            continue
        res = gelfand_shift(a, b)
        assert res.t in (0, 1)
        assert res.d == a + b * res.t and is_gelfand(res.d)
        done += 1


def test_factor_examples():
    fac = gelfand_factor(Z(6), Z(2), Z(3))
    assert (fac.r, fac.s) == (3, 2)
    fac = gelfand_factor(H("6 + 3*x"), H(3), H("2 + x"))
    assert (fac.r, fac.s) == (H("2 + x"), H(3))
    fac = gelfand_factor(H("2 + x"), H(3), H(5))
    assert (fac.r, fac.s) == (H("2 + x"), H(1))
    assert fac.is_valid()


def test_factor_preconditions():
    with pytest.raises(PreconditionError):
        gelfand_factor(Z(0), Z(1), Z(1))
    with pytest.raises(PreconditionError):
        gelfand_factor(H("x"), H(2), H(3))
    with pytest.raises(PreconditionError):
        gelfand_factor(Z(6), Z(2), Z(4))


@pytest.mark.parametrize("ring", RINGS)
def test_factor_self_certifies(ring):
    rng = random.Random(42)
    done = 0
    while done < 1000:
        a, d, c = rand_unimodular_triple(ring, rng, int_bound=200, max_deg=2, cap=6)
        if not is_gelfand(d):
            continue
        fac = gelfand_factor(d, a, c)
        done += 1
        assert fac.r * fac.s == d
        assert coprime(fac.r, a) and coprime(fac.s, c)
