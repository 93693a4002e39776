"""Arithmetic in H = Z + xQ[x]: rational polynomials with integer constant term.

This is the polynomial model of Henriksen's ring.  Units are ``+1`` and ``-1``;
every nonzero integer divides every element with zero constant term, which is
what makes the ring interesting (``gcd(x, 2) = 2``).

The functions here work on bare :class:`RatPoly` values that already satisfy
the constant-term condition.  :mod:`bezout_snf.rings` wraps them into tagged
ring elements and gcd certificates.
"""

from __future__ import annotations

from .errors import NonIntegerConstantError
from .numeric import Rational, RatPoly, format_rational, int_xgcd, poly_divrem, poly_xgcd_field, rational_pair_gcd


def is_henriksen(p: RatPoly) -> bool:
    return p.constant.denominator == 1


def validate_henriksen(p: RatPoly) -> RatPoly:
    """Return ``p`` unchanged if its constant term is an integer."""
    if not is_henriksen(p):
        raise NonIntegerConstantError(
            f"constant term {format_rational(p.constant)} is not an integer; "
            "Henriksen elements need z0 in Z"
        )
    return p


def canonical_henriksen(p: RatPoly) -> RatPoly:
    """Associate whose lowest-degree nonzero coefficient is positive."""
    return -p if p.lowest_coeff() < 0 else p


def divides_henriksen(d: RatPoly, f: RatPoly) -> bool:
    """True iff ``f = d*q`` for some ``q`` in H."""
    if d.is_zero():
        return f.is_zero()
    q, r = poly_divrem(f, d)
    return r.is_zero() and q.constant.denominator == 1


def is_unit_henriksen(p: RatPoly) -> bool:
    return p.is_constant() and abs(p.constant) == 1


def is_gelfand_henriksen(p: RatPoly) -> bool:
    """Gelfand elements of H are exactly those with nonzero constant term.

    The primes of H are 0, xQ[x] and the maximal ideals ``pZ + xQ[x]`` (plus
    maximals of the form ``fQ[x] ∩ H`` with ``f(0) != 0``).  Every maximal of
    the first kind contains xQ[x], so an element lying in xQ[x] sits in a
    prime with many maximal overideals.  An element with ``a(0) != 0`` only
    lies in primes that are already maximal.
    """
    return not p.is_zero() and p.constant != 0


def _normalize_at_zero(h: RatPoly) -> RatPoly:
    # h(0) != 0 is guaranteed by the callers
    return h.scale(1 / h.constant)


def _shift_coefficients(alpha, beta, f_red, g_red, want_a: Rational, want_b: Rational):
    """Move ``(alpha, beta)`` along ``(g_red, -f_red)`` to hit constant terms.

    ``alpha*f_red + beta*g_red == 1`` on entry; on exit the same holds and
    ``alpha(0) == want_a``, ``beta(0) == want_b`` (which must be consistent
    with ``want_a*f_red(0) + want_b*g_red(0) == 1``).
    """
    f0, g0 = f_red.constant, g_red.constant
    if g0:
        tau = (want_a - alpha.constant) / g0
    else:
        tau = (beta.constant - want_b) / f0
    return alpha + g_red.scale(tau), beta - f_red.scale(tau)


def xgcd_henriksen(f: RatPoly, g: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Return ``(G, U, V)`` with ``U*f + V*g == G`` and ``G`` a canonical gcd in H.

    ``U`` and ``V`` are elements of H.  Three shapes:

    * one argument zero: ``G`` is the canonical associate of the other;
    * some constant term nonzero: ``G = n*h`` with ``h`` the Q[x] gcd scaled
      to ``h(0) = 1`` and ``n = gcd(f(0), g(0))``;
    * both constant terms zero: ``G = q*x^m*h`` where ``m`` is the smaller
      x-adic valuation, ``h`` the gcd of the x-free parts and ``q`` the
      rational gcd of the leading x-adic coefficients of ``f/(x^m h)`` and
      ``g/(x^m h)``.

    In the last two cases the Q[x] Bezout pair is shifted by a rational
    multiple of the syzygy ``(g/h, -f/h)`` so its constant terms become
    integer Bezout coefficients for ``n`` (respectively ``q``).
    """
    if g.is_zero() and f.is_zero():
        return RatPoly(), RatPoly(), RatPoly()
    if g.is_zero():
        sign = -1 if f.lowest_coeff() < 0 else 1
        return f.scale(sign), RatPoly.const(sign), RatPoly()
    if f.is_zero():
        sign = -1 if g.lowest_coeff() < 0 else 1
        return g.scale(sign), RatPoly(), RatPoly.const(sign)

    f0, g0 = f.constant, g.constant
    if f0 or g0:
        h, alpha, beta = poly_xgcd_field(f, g)
        c = h.constant
        h, alpha, beta = h.scale(1 / c), alpha.scale(1 / c), beta.scale(1 / c)
        n, ub, vb = int_xgcd(int(f0), int(g0))
        f_red, _ = poly_divrem(f, h)
        g_red, _ = poly_divrem(g, h)
        alpha, beta = _shift_coefficients(alpha, beta, f_red, g_red, Rational(ub, n), Rational(vb, n))
        return h.scale(n), alpha.scale(n), beta.scale(n)

    a, f_star = f.strip_x()
    b, g_star = g.strip_x()
    m = min(a, b)
    h = _normalize_at_zero(poly_xgcd_field(f_star, g_star)[0])
    assert h.constant == 1, "x-free parts must have a gcd with h(0) != 0"
    base = h.shift(m)
    f_red, rem_f = poly_divrem(f, base)
    g_red, rem_g = poly_divrem(g, base)
    assert rem_f.is_zero() and rem_g.is_zero()
    q, u, v = rational_pair_gcd(f_red.constant, g_red.constant)
    _, alpha, beta = poly_xgcd_field(f_red, g_red)
    alpha, beta = _shift_coefficients(alpha, beta, f_red, g_red, u / q, v / q)
    return base.scale(q), alpha.scale(q), beta.scale(q)


def omega(n: int) -> int:
    """Number of prime factors of ``|n|`` counted with multiplicity."""
    n = abs(n)
    count, p = 0, 2
    while p * p <= n:
        while n % p == 0:
            n //= p
            count += 1
        p += 1
    return count + (1 if n > 1 else 0)

