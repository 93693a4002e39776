"""Random element generators shared by the test modules (fixed seeds at call sites)."""

import random

from bezout_snf.numeric import Rational, RatPoly
from bezout_snf.rings import RingElement, RingId, gcd_many, is_unit

RINGS = [RingId.INTEGERS, RingId.RATPOLY, RingId.HENRIKSEN]


def rand_rational(rng: random.Random, cap: int) -> Rational:
    return Rational(rng.randint(-cap, cap), rng.randint(1, cap))


def rand_ratpoly(rng: random.Random, max_deg: int, cap: int = 20) -> RatPoly:
    deg = rng.randint(0, max_deg)
    return RatPoly([rand_rational(rng, cap) for _ in range(deg + 1)])


def rand_henriksen_poly(rng: random.Random, max_deg: int, cap: int = 20) -> RatPoly:
    deg = rng.randint(0, max_deg)
    # a zero constant term is common enough to hit the x-adic gcd branch
    const = 0 if rng.random() < 0.3 else rng.randint(-cap, cap)
    return RatPoly([const] + [rand_rational(rng, cap) for _ in range(deg)])


def rand_element(ring: RingId, rng: random.Random, *, int_bound: int = 10**9, max_deg: int = 4, cap: int = 20) -> RingElement:
    if ring is RingId.INTEGERS:
        return RingElement(ring, rng.randint(-int_bound, int_bound))
    if ring is RingId.RATPOLY:
        return RingElement(ring, rand_ratpoly(rng, max_deg, cap))
    return RingElement(ring, rand_henriksen_poly(rng, max_deg, cap))


def rand_unimodular_triple(ring: RingId, rng: random.Random, **kw):
    while True:
        triple = [rand_element(ring, rng, **kw) for _ in range(3)]
        if is_unit(gcd_many(triple)[0]):
            return triple
