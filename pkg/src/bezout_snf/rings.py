"""The three Bezout domains and their self-certifying extended gcd.

Elements are :class:`RingElement` values tagged with a :class:`RingId`.
Arithmetic between elements of different rings raises
:class:`~bezout_snf.errors.RingMismatchError`.

>>> a, b = Z(12), Z(18)
>>> cert = xgcd(a, b)
>>> cert.g, cert.u, cert.v
(Z(6), Z(-1), Z(1))
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import henriksen as _h
from .errors import NotDivisibleError, ParseError, PreconditionError, RingMismatchError
from .numeric import (
    Rational,
    RatPoly,
    format_poly,
    int_xgcd,
    parse_integer,
    parse_poly,
    poly_divrem,
    poly_xgcd_field,
)


class RingId(str, enum.Enum):
    INTEGERS = "integers"
    RATPOLY = "ratpoly"
    HENRIKSEN = "henriksen"

    def __str__(self) -> str:
        return self.value


class _IntegerOps:
    name = "Z"

    @staticmethod
    def check(v):
        if type(v) is not int:
            raise TypeError(f"integer ring payload must be int, got {type(v).__name__}")
        return v

    zero = 0
    one = 1

    @staticmethod
    def is_zero(v):
        return v == 0

    @staticmethod
    def is_unit(v):
        return v in (1, -1)

    @staticmethod
    def canonical_unit(v):
        return -1 if v < 0 else 1

    @staticmethod
    def inverse_unit(w):
        return w

    @staticmethod
    def quotient(a, d):
        # None when d does not divide a; d != 0
        q, r = divmod(a, d)
        return q if r == 0 else None

    @staticmethod
    def xgcd(a, b):
        return int_xgcd(a, b)

    @staticmethod
    def fmt(v):
        return str(v)

    @staticmethod
    def parse(text):
        return parse_integer(text)

    @staticmethod
    def chain_bound(v):
        return abs(v).bit_length() + 2


class _RatPolyOps:
    name = "QX"

    @staticmethod
    def check(v):
        if not isinstance(v, RatPoly):
            raise TypeError(f"polynomial ring payload must be RatPoly, got {type(v).__name__}")
        return v

    zero = RatPoly()
    one = RatPoly.const(1)

    @staticmethod
    def is_zero(v):
        return v.is_zero()

    @staticmethod
    def is_unit(v):
        return v.degree == 0

    @staticmethod
    def canonical_unit(v):
        return RatPoly.const(1 / v.lead) if not v.is_zero() else RatPoly.const(1)

    @staticmethod
    def inverse_unit(w):
        return RatPoly.const(1 / w.constant)

    @staticmethod
    def quotient(a, d):
        q, r = poly_divrem(a, d)
        return q if r.is_zero() else None

    @staticmethod
    def xgcd(a, b):
        return poly_xgcd_field(a, b)

    @staticmethod
    def fmt(v):
        return format_poly(v)

    @staticmethod
    def parse(text):
        return parse_poly(text)

    @staticmethod
    def chain_bound(v):
        return (v.degree or 0) + 2


class _HenriksenOps(_RatPolyOps):
    name = "H"

    @staticmethod
    def check(v):
        _RatPolyOps.check(v)
        return _h.validate_henriksen(v)

    @staticmethod
    def is_unit(v):
        return _h.is_unit_henriksen(v)

    @staticmethod
    def canonical_unit(v):
        return RatPoly.const(-1 if v.lowest_coeff() < 0 else 1)

    @staticmethod
    def inverse_unit(w):
        return w

    @staticmethod
    def quotient(a, d):
        q, r = poly_divrem(a, d)
        if r.is_zero() and q.constant.denominator == 1:
            return q
        return None

    @staticmethod
    def xgcd(a, b):
        return _h.xgcd_henriksen(a, b)

    @staticmethod
    def parse(text):
        return _h.validate_henriksen(parse_poly(text))

    @staticmethod
    def chain_bound(v):
        deg = v.degree or 0
        if v.constant:
            return _h.omega(int(v.constant)) + deg + 2
        low = v.lowest_coeff()
        return deg + 2 + abs(low.numerator).bit_length() + low.denominator.bit_length()


_OPS = {
    RingId.INTEGERS: _IntegerOps,
    RingId.RATPOLY: _RatPolyOps,
    RingId.HENRIKSEN: _HenriksenOps,
}


def ring_id(value) -> RingId:
    try:
        return RingId(value)
    except ValueError:
        raise ParseError(f"unknown ring {value!r}; expected one of integers, ratpoly, henriksen") from None


@dataclass(frozen=True, slots=True, eq=False)
class RingElement:
    """An element of one of the three rings.

    ``value`` is an ``int`` for the integers and a :class:`RatPoly` for the
    other two; Henriksen payloads must have an integer constant term.
    """

    ring: RingId
    value: object

    def __post_init__(self):
        object.__setattr__(self, "ring", RingId(self.ring))
        _OPS[self.ring].check(self.value)

    @classmethod
    def _trusted(cls, ring: RingId, value) -> RingElement:
        el = object.__new__(cls)
        object.__setattr__(el, "ring", ring)
        object.__setattr__(el, "value", value)
        return el

    @property
    def ops(self):
        return _OPS[self.ring]

    def _other(self, other) -> RingElement:
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise RingMismatchError(f"cannot combine {self.ring} and {other.ring} elements")
            return other
        if isinstance(other, int):
            return embed(self.ring, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring is other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return RingElement._trusted(self.ring, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return RingElement._trusted(self.ring, self.value - o.value)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return RingElement._trusted(self.ring, o.value - self.value)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return RingElement._trusted(self.ring, self.value * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement._trusted(self.ring, -self.value)

    def __pow__(self, k: int):
        result = one(self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.ops.is_zero(self.value)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        return self.ops.fmt(self.value)

    def __repr__(self) -> str:
        return f"{self.ops.name}({self.ops.fmt(self.value)!r})" if self.ring is not RingId.INTEGERS else f"Z({self.value})"


def Z(n: int) -> RingElement:
    return RingElement(RingId.INTEGERS, n)


def QX(p) -> RingElement:
    if isinstance(p, str):
        p = parse_poly(p)
    elif not isinstance(p, RatPoly):
        p = RatPoly.const(p)
    return RingElement(RingId.RATPOLY, p)


def H(p) -> RingElement:
    if isinstance(p, str):
        p = parse_poly(p)
    elif not isinstance(p, RatPoly):
        p = RatPoly.const(p)
    return RingElement(RingId.HENRIKSEN, p)


def embed(ring: RingId, n) -> RingElement:
    """Image of an integer (or a rational, for Q[x]) in ``ring``."""
    ring = RingId(ring)
    if ring is RingId.INTEGERS:
        return RingElement(ring, int(n))
    return RingElement(ring, RatPoly.const(n))


def zero(ring: RingId) -> RingElement:
    return RingElement._trusted(RingId(ring), _OPS[RingId(ring)].zero)


def one(ring: RingId) -> RingElement:
    return RingElement._trusted(RingId(ring), _OPS[RingId(ring)].one)


def parse_element(ring, text: str) -> RingElement:
    """Parse ``text`` in the shared element grammar as an element of ``ring``."""
    ring = ring_id(ring)
    return RingElement._trusted(ring, _OPS[ring].parse(text))


def format_element(a: RingElement) -> str:
    return str(a)


def _same_ring(*elements: RingElement) -> RingId:
    ring = elements[0].ring
    for e in elements[1:]:
        if e.ring is not ring:
            raise RingMismatchError(f"cannot combine {ring} and {e.ring} elements")
    return ring


@dataclass(frozen=True)
class GcdCertificate:
    """Bezout identity ``a*u + b*v == g`` together with ``a = g*a1``, ``b = g*b1``."""

    ring: RingId
    a: RingElement
    b: RingElement
    g: RingElement
    u: RingElement
    v: RingElement
    a1: RingElement
    b1: RingElement

    def failures(self) -> list[str]:
        """Names of the invariants that do not hold (empty when valid)."""
        bad = []
        if self.a * self.u + self.b * self.v != self.g:
            bad.append("bezout")
        if self.g * self.a1 != self.a:
            bad.append("cofactor_a")
        if self.g * self.b1 != self.b:
            bad.append("cofactor_b")
        if canonical(self.g) != self.g:
            bad.append("canonical")
        if self.g.is_zero() != (self.a.is_zero() and self.b.is_zero()):
            bad.append("zero")
        return bad

    def is_valid(self) -> bool:
        return not self.failures()


def xgcd(a: RingElement, b: RingElement) -> GcdCertificate:
    """Extended gcd with a checkable certificate.

    ``xgcd(0, 0)`` is the all-zero certificate.
    """
    ring = _same_ring(a, b)
    ops = _OPS[ring]
    if ops.is_zero(a.value) and ops.is_zero(b.value):
        z = zero(ring)
        return GcdCertificate(ring, a, b, z, z, z, z, z)
    g, u, v = ops.xgcd(a.value, b.value)
    w = ops.canonical_unit(g)
    if w != ops.one:
        g, u, v = g * w, u * w, v * w
    a1 = ops.quotient(a.value, g)
    b1 = ops.quotient(b.value, g)
    mk = RingElement._trusted
    return GcdCertificate(ring, a, b, mk(ring, g), mk(ring, u), mk(ring, v), mk(ring, a1), mk(ring, b1))


def gcd(a: RingElement, b: RingElement) -> RingElement:
    return xgcd(a, b).g


def gcd_many(values: Sequence[RingElement]) -> tuple[RingElement, list[RingElement]]:
    """Fold ``xgcd`` over ``values``: returns ``g`` and ``coeffs`` with ``sum(c*v) == g``."""
    if not values:
        raise PreconditionError("gcd_many needs at least one element")
    ring = _same_ring(*values)
    first = values[0]
    g = canonical(first)
    coeffs = [exact_div(g, first) if not first.is_zero() else zero(ring)]
    for v in values[1:]:
        cert = xgcd(g, v)
        coeffs = [c * cert.u for c in coeffs]
        coeffs.append(cert.v)
        g = cert.g
    return g, coeffs


def divides(d: RingElement, a: RingElement) -> bool:
    ring = _same_ring(d, a)
    ops = _OPS[ring]
    if ops.is_zero(d.value):
        return ops.is_zero(a.value)
    return ops.quotient(a.value, d.value) is not None


def exact_div(a: RingElement, d: RingElement) -> RingElement:
    """The unique ``q`` with ``q*d == a``."""
    ring = _same_ring(a, d)
    ops = _OPS[ring]
    if ops.is_zero(d.value):
        raise ZeroDivisionError("exact division by zero")
    q = ops.quotient(a.value, d.value)
    if q is None:
        raise NotDivisibleError(f"{d} does not divide {a} in {ring}")
    return RingElement._trusted(ring, q)


def is_unit(a: RingElement) -> bool:
    return a.ops.is_unit(a.value)


def canonical(a: RingElement) -> RingElement:
    """Unique associate: nonnegative in Z, monic in Q[x], positive lowest coefficient in H."""
    w = a.ops.canonical_unit(a.value)
    if w == a.ops.one:
        return a
    return RingElement._trusted(a.ring, a.value * w)


def canonical_unit(a: RingElement) -> RingElement:
    """Unit ``w`` with ``canonical(a) == w*a``."""
    return RingElement._trusted(a.ring, a.ops.canonical_unit(a.value))


def unit_inverse(w: RingElement) -> RingElement:
    if not is_unit(w):
        raise PreconditionError(f"{w} is not a unit")
    return RingElement._trusted(w.ring, w.ops.inverse_unit(w.value))


def coprime(a: RingElement, b: RingElement) -> bool:
    return is_unit(xgcd(a, b).g)


def associates(a: RingElement, b: RingElement) -> bool:
    _same_ring(a, b)
    return canonical(a) == canonical(b)


def chain_bound(a: RingElement) -> int:
    """Bound on the length of strictly ascending divisor chains starting at ``a``."""
    return a.ops.chain_bound(a.value)


def constant_term(a: RingElement) -> Rational:
    if a.ring is RingId.INTEGERS:
        return Rational(a.value)
    return a.value.constant
