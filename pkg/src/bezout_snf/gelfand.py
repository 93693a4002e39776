"""Gelfand elements, the Gelfand shift and the constructive split ``d = r*s``.

An element ``a`` is Gelfand when ``R/aR`` is a PM ring, i.e. every prime
containing ``a`` lies in a single maximal ideal.  For Z and Q[x] (every
nonzero prime is maximal) that means ``a != 0``; for Z + xQ[x] it means
``a(0) != 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCoprimeError, PreconditionError, ShiftNotFoundError, StabilizationError
from .henriksen import is_gelfand_henriksen
from .rings import (
    RingElement,
    RingId,
    associates,
    chain_bound,
    coprime,
    exact_div,
    gcd,
    gcd_many,
    is_unit,
    one,
    zero,
)


@dataclass(frozen=True)
class ShiftResult:
    t: RingElement
    d: RingElement


@dataclass(frozen=True)
class GelfandFactorization:
    d: RingElement
    a_ctx: RingElement
    c_ctx: RingElement
    r: RingElement
    s: RingElement
    iterations: int

    def is_valid(self) -> bool:
        return self.r * self.s == self.d and coprime(self.r, self.a_ctx) and coprime(self.s, self.c_ctx)


def is_gelfand(a: RingElement) -> bool:
    if a.ring is RingId.HENRIKSEN:
        return is_gelfand_henriksen(a.value)
    return not a.is_zero()


def gelfand_shift(a: RingElement, b: RingElement) -> ShiftResult:
    """Find ``t`` in {0, 1} making ``a + b*t`` Gelfand, for coprime ``a``, ``b``.

    If ``a`` is not Gelfand then ``a + b`` is, on any ring where one of each
    coprime pair is Gelfand; all three supported rings have that property.
    """
    if not coprime(a, b):
        raise NotCoprimeError(f"gelfand_shift needs coprime arguments, got ({a}, {b})")
    if is_gelfand(a):
        return ShiftResult(zero(a.ring), a)
    d = a + b
    if is_gelfand(d):
        return ShiftResult(one(a.ring), d)
    raise ShiftNotFoundError(
        f"neither {a} nor {d} is Gelfand; the ring is not local Gelfand at this pair"
    )


def gelfand_factor(d: RingElement, a: RingElement, c: RingElement) -> GelfandFactorization:
    """Split a Gelfand ``d`` as ``r*s`` with ``r`` coprime to ``a`` and ``s`` coprime to ``c``.

    ``s`` is the stable value of ``gcd(d, a**k)``: the part of ``d`` that
    shares primes with ``a``.  Any maximal ideal holding ``s`` and ``c``
    would hold ``d`` and ``a``, so the triple precondition gives ``s`` coprime
    to ``c``.

    Raises:
        PreconditionError: ``d`` is zero or not Gelfand, or ``(a, d, c)`` is
            not unimodular.
        StabilizationError: no stabilization within the divisor-chain bound.
    """
    if d.is_zero():
        raise PreconditionError("gelfand_factor: d must be nonzero")
    if not is_gelfand(d):
        raise PreconditionError(f"gelfand_factor: {d} is not a Gelfand element")
    if not is_unit(gcd_many([a, d, c])[0]):
        raise PreconditionError(f"gelfand_factor: ({a}, {d}, {c}) is not unimodular")

    bound = chain_bound(d)
    power = a
    s = gcd(d, power)
    for k in range(1, bound + 1):
        power = power * a
        nxt = gcd(d, power)
        if associates(nxt, s):
            r = exact_div(d, s)
            fac = GelfandFactorization(d, a, c, r, s, k)
            if not fac.is_valid():
                raise StabilizationError(f"stable split of {d} against ({a}, {c}) failed its coprimality check")
            return fac
        s = nxt
    raise StabilizationError(
        f"gcd({d}, {a}^k) did not stabilize within {bound} steps; {d} is likely not Gelfand"
    )
