"""Exact integers, rationals and polynomials over the rationals.

Integers are Python ``int``; rationals are ``gmpy2.mpq`` (exported here as
:data:`Rational`), which keeps ``den > 0`` and ``gcd(num, den) == 1``.  :class:`RatPoly`
is an immutable dense polynomial in ascending-degree order.

Also home to the element text grammar used by the CLI and the certificates::

    2 + 1/2*x - 7*x^2        -12        x        -3/4*x^5 + x
"""

from __future__ import annotations

import operator
from fractions import Fraction
from math import gcd
from typing import Iterable

import gmpy2

from .errors import ParseError

Rational = gmpy2.mpq
_MPQ = type(Rational(0))
_SCALARS = (int, type(gmpy2.mpz(0)), _MPQ, Fraction)

__all__ = [
    "Rational",
    "RatPoly",
    "int_xgcd",
    "rat_arith",
    "poly_divrem",
    "poly_xgcd_field",
    "rational_pair_gcd",
    "parse_rational",
    "parse_poly",
    "parse_integer",
    "format_rational",
    "format_poly",
]

_RAT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(op: str, a, b) -> Rational:
    """Apply ``op`` (add, sub, mul or div) to two rationals exactly.

    Raises ``ZeroDivisionError`` on division by zero.
    """
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    return fn(Rational(a), Rational(b))


def int_xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid on integers: ``(g, u, v)`` with ``a*u + b*v == g >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class RatPoly:
    """Polynomial with rational coefficients, lowest degree first.

    The zero polynomial has no coefficients and ``degree`` ``None``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if type(c) is _MPQ else Rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Rational, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list) -> RatPoly:
        # caller guarantees mpq entries; only strips trailing zeros
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> RatPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c, k: int) -> RatPoly:
        return cls([0] * k + [c])

    X: RatPoly  # set below

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else Rational(0)

    @property
    def constant(self) -> Rational:
        return self.coeffs[0] if self.coeffs else Rational(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Rational(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, _SCALARS):
            return self.coeffs == RatPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("RatPoly", self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"RatPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> RatPoly:
        return RatPoly._raw([-c for c in self.coeffs])

    def __add__(self, other) -> RatPoly:
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> RatPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> RatPoly:
        return _as_poly(other) - self

    def __mul__(self, other) -> RatPoly:
        if isinstance(other, _SCALARS):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly._raw([])
        out = [Rational(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return RatPoly._raw(out)

    def __rmul__(self, other) -> RatPoly:
        return self.scale(other)

    def scale(self, c) -> RatPoly:
        c = Rational(c)
        if not c:
            return RatPoly._raw([])
        return RatPoly._raw([c * x for x in self.coeffs])

    def shift(self, k: int) -> RatPoly:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return RatPoly._raw([Rational(0)] * k + list(self.coeffs))

    def __pow__(self, k: int) -> RatPoly:
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = RatPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self) -> RatPoly:
        if not self.coeffs:
            return self
        return self.scale(1 / self.lead)

    def x_valuation(self) -> int:
        """Largest ``k`` with ``x**k`` dividing ``self`` (zero polynomial: 0)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def strip_x(self) -> tuple[int, RatPoly]:
        """Split ``self = x**k * rest`` with ``rest(0) != 0``."""
        k = self.x_valuation()
        return k, RatPoly._raw(list(self.coeffs[k:]))

    def lowest_coeff(self) -> Rational:
        for c in self.coeffs:
            if c:
                return c
        return Rational(0)

    def __call__(self, value):
        acc = Rational(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def divrem(self, other: RatPoly) -> tuple[RatPoly, RatPoly]:
        return poly_divrem(self, other)


RatPoly.X = RatPoly((0, 1))


def _as_poly(value) -> RatPoly:
    if isinstance(value, RatPoly):
        return value
    if isinstance(value, _SCALARS):
        return RatPoly.const(value)
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


def poly_divrem(f: RatPoly, g: RatPoly) -> tuple[RatPoly, RatPoly]:
    """Euclidean division ``f = q*g + r`` with ``deg r < deg g``."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(rem) - 1 < dg:
        return RatPoly._raw([]), f
    inv_lead = 1 / g.lead
    quot = [Rational(0)] * (len(rem) - dg)
    gc = g.coeffs
    for i in range(len(rem) - 1 - dg, -1, -1):
        c = rem[i + dg] * inv_lead
        quot[i] = c
        if c:
            for j, gj in enumerate(gc):
                rem[i + j] -= c * gj
    return RatPoly._raw(quot), RatPoly._raw(rem[:dg])


def poly_xgcd_field(f: RatPoly, g: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Extended Euclid in Q[x].

    Returns ``(h, alpha, beta)`` with ``alpha*f + beta*g == h`` and ``h`` the
    monic gcd (zero only when both inputs are zero). Terminates because the
    remainder degree strictly drops.
    """
    if g.is_zero():
        if f.is_zero():
            return RatPoly(), RatPoly(), RatPoly()
        inv = 1 / f.lead
        return f.scale(inv), RatPoly.const(inv), RatPoly()
    # only the f-cofactor is tracked; beta comes from one exact division
    r0, r1 = f, g
    s0, s1 = RatPoly.const(1), RatPoly()
    while not r1.is_zero():
        q, r = poly_divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    inv = 1 / r0.lead
    h, alpha = r0.scale(inv), s0.scale(inv)
    beta, rem = poly_divrem(h - alpha * f, g)
    assert rem.is_zero()
    return h, alpha, beta


def rational_pair_gcd(r, s) -> tuple[Rational, int, int]:
    """Gcd of two rationals relative to the integers.

    Returns ``(q, u, v)`` with ``u*r + v*s == q > 0``, both ``r/q`` and ``s/q``
    integers, and ``q/t`` an integer for every rational ``t`` dividing both
    ``r`` and ``s`` in that sense.
    """
    r, s = Rational(r), Rational(s)
    if not r and not s:
        raise ZeroDivisionError("rational gcd of (0, 0) is undefined")
    rd, sd = int(r.denominator), int(s.denominator)
    den = rd * sd // gcd(rd, sd)
    g, u, v = int_xgcd(int(r * den), int(s * den))
    return Rational(g, den), u, v


# --- text grammar ---------------------------------------------------------

_MINUS_SIGNS = "−–‒﹣－"


def normalize_text(text: str) -> str:
    for ch in _MINUS_SIGNS:
        text = text.replace(ch, "-")
    return text


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def digits(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected {what}", start)
        return int(self.text[start:self.pos])

    def at_end(self) -> bool:
        return self.peek() == ""


def _parse_unsigned_rational(sc: _Scanner) -> Rational:
    num = sc.digits("digits")
    if sc.take("/"):
        pos = sc.pos
        den = sc.digits("denominator")
        if den == 0:
            raise ParseError("zero denominator", pos)
        return Rational(num, den)
    return Rational(num)


def parse_rational(text: str) -> Rational:
    sc = _Scanner(normalize_text(text))
    sign = -1 if sc.take("-") else 1
    if sign == 1:
        sc.take("+")
    value = _parse_unsigned_rational(sc)
    if not sc.at_end():
        raise ParseError(f"unexpected {sc.peek()!r}", sc.pos)
    return sign * value


def parse_integer(text: str) -> int:
    sc = _Scanner(normalize_text(text))
    sign = -1 if sc.take("-") else 1
    if sign == 1:
        sc.take("+")
    value = sc.digits("integer")
    if not sc.at_end():
        raise ParseError(f"unexpected {sc.peek()!r} in integer", sc.pos)
    return sign * value


def parse_poly(text: str, var: str = "x") -> RatPoly:
    """Parse ``c``, ``c*x``, ``c*x^k`` terms joined by ``+``/``-`` in any order.

    A bare ``x`` or ``x^k`` means coefficient one. Repeated degrees add up.
    """
    sc = _Scanner(normalize_text(text))
    if sc.at_end():
        raise ParseError("empty polynomial", 0)
    terms: dict[int, Rational] = {}
    first = True
    while True:
        if sc.take("-"):
            sign = -1
        elif sc.take("+"):
            sign = 1
        elif first:
            sign = 1
        else:
            raise ParseError(f"expected '+' or '-', got {sc.peek()!r}", sc.pos)
        first = False
        ch = sc.peek()
        if ch.isdigit():
            coeff = _parse_unsigned_rational(sc)
            has_var = False
            if sc.take("*"):
                if sc.peek() != var:
                    raise ParseError(f"expected {var!r} after '*'", sc.pos)
                has_var = True
        elif ch == var:
            coeff = Rational(1)
            has_var = True
        else:
            raise ParseError(f"expected a term, got {ch!r}" if ch else "expected a term", sc.pos)
        exp = 0
        if has_var:
            sc.take(var)
            exp = 1
            if sc.take("^"):
                exp = sc.digits("exponent")
        terms[exp] = terms.get(exp, Rational(0)) + sign * coeff
        if sc.at_end():
            break
    top = max(terms)
    coeffs = [Rational(0)] * (top + 1)
    for k, c in terms.items():
        coeffs[k] = c
    return RatPoly(coeffs)


def format_rational(c) -> str:
    c = Rational(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_poly(p: RatPoly, var: str = "x") -> str:
    """Canonical text: ascending degree, explicit ``*`` before the variable."""
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"

