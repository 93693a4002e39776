"""Brute-force ground truth on finite quotients Z/n and bounded searches in Z and H.

Nothing here calls the Gelfand predicates it is meant to check, except where
noted: a split found by :func:`~bezout_snf.gelfand.gelfand_factor` is
re-certified with plain gcds before it counts as evidence.

Every report with ``verdict=False`` carries a witness that
:func:`revalidate` can re-check from scratch.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd

from .errors import AlgebraError, PreconditionError
from .numeric import Rational, RatPoly, poly_divrem, poly_xgcd_field
from .rings import RingElement, RingId, coprime, exact_div, gcd_many, is_unit, parse_element, ring_id

DEFAULT_BOUND = 20
DEFAULT_SAMPLES = 20
DEFAULT_SEED = 0
ZMOD_CAP = 200


@dataclass(frozen=True)
class ZmodStructure:
    """Ideal lattice of Z/n: the ideal dZ/nZ is stored as the divisor d."""

    n: int
    ideals: tuple[int, ...]
    primes: tuple[int, ...]
    maximals: tuple[int, ...]


@dataclass(frozen=True)
class WitnessReport:
    check: str
    params: dict
    verdict: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        return {"check": self.check, "params": self.params, "verdict": self.verdict, "witness": self.witness}


# --- Z/n ------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _quotient_is_domain(d: int) -> bool:
    # Z/d has no zero divisors
    for x in range(1, d):
        for y in range(1, d):
            if x * y % d == 0:
                return False
    return True


@lru_cache(maxsize=None)
def zmod_structure(n: int) -> ZmodStructure:
    """Divisor lattice of ``n`` with primes and maximals found independently.

    Primes: proper ideals dZ/nZ whose quotient Z/d has no zero divisors.
    Maximals: proper ideals with no proper ideal strictly above them
    (dZ/nZ contains eZ/nZ iff d divides e).
    """
    if n < 2:
        raise PreconditionError(f"zmod_structure needs n >= 2, got {n}")
    ideals = _divisors(n)
    proper = [d for d in ideals if d != 1]
    primes = [d for d in proper if _quotient_is_domain(d)]
    maximals = [d for d in proper if not any(e != d and d % e == 0 for e in proper)]
    assert primes == maximals, f"Z/{n} should be zero-dimensional"
    return ZmodStructure(n, tuple(ideals), tuple(primes), tuple(maximals))


def is_pm_zmod(n: int) -> WitnessReport:
    """Every prime ideal of Z/n lies in exactly one maximal ideal."""
    st = zmod_structure(n)
    for p in st.primes:
        above = [m for m in st.maximals if p % m == 0]
        if len(above) != 1:
            return WitnessReport("pm", {"n": n}, False, {"prime": p, "maximals": above})
    return WitnessReport("pm", {"n": n}, True)


def _units_mask(n: int) -> list[bool]:
    return [gcd(x, n) == 1 for x in range(n)]


@lru_cache(maxsize=None)
def is_sr1_zmod(n: int) -> WitnessReport:
    """Stable range one of Z/n by exhaustive search.

    The multiples ``b*t`` of ``b`` in Z/n are exactly the multiples of
    ``g = gcd(b, n)``, and ``gcd(a, b, n) = gcd(a, g)``, so pairs are grouped by
    ``g`` and each coset ``a + gZ/nZ`` is scanned in full.
    """
    if n < 2:
        raise PreconditionError(f"is_sr1_zmod needs n >= 2, got {n}")
    unit = _units_mask(n)
    for g in _divisors(n):
        for a in range(n):
            if unit[a] or gcd(a, g) != 1:
                continue
            if not any(unit[(a + g * t) % n] for t in range(n // g)):
                return WitnessReport("sr1", {"n": n}, False, {"a": a, "b": g})
    return WitnessReport("sr1", {"n": n}, True)


def is_sr1_zmod_naive(n: int) -> bool:
    """Triple loop over ``a``, ``b``, ``t``; for cross-checking small ``n``."""
    for a in range(n):
        for b in range(n):
            if gcd(gcd(a, b), n) != 1:
                continue
            if not any(gcd((a + b * t) % n, n) == 1 for t in range(n)):
                return False
    return True


def is_clean_zmod(n: int) -> WitnessReport:
    """Every element of Z/n is an idempotent plus a unit."""
    if n < 2:
        raise PreconditionError(f"is_clean_zmod needs n >= 2, got {n}")
    unit = _units_mask(n)
    idem = [e for e in range(n) if e * e % n == e]
    for a in range(n):
        if not any(unit[(a - e) % n] for e in idem):
            return WitnessReport("clean", {"n": n}, False, {"a": a, "idempotents": idem})
    return WitnessReport("clean", {"n": n}, True, {"idempotents": idem})


# --- S(Z) -----------------------------------------------------------------

ZERO_SR1_WITNESS = (2, 5)


def s_member_int(a: int) -> WitnessReport:
    """Is ``Z/aZ`` of stable range one?

    ``Z/0 = Z`` is not: ``(2, 5)`` is unimodular but ``2 + 5t`` is never ``±1``.
    """
    if a == 0:
        b, c = ZERO_SR1_WITNESS
        return WitnessReport("s-member", {"a": 0}, False, {"b": b, "c": c})
    if abs(a) == 1:
        return WitnessReport("s-member", {"a": a}, True)
    inner = is_sr1_zmod(abs(a))
    return WitnessReport("s-member", {"a": a}, inner.verdict, inner.witness)


def s_closure_check(bound: int) -> WitnessReport:
    """S(Z) is multiplicatively closed and saturated on ``0 < |a|, |b| <= bound``."""
    if bound < 2:
        raise PreconditionError("s_closure_check needs bound >= 2")
    values = [v for v in range(-bound, bound + 1) if v]
    member = {}

    def s(v):
        if v not in member:
            member[v] = s_member_int(v).verdict
        return member[v]

    for a in values:
        for b in values:
            if s(a) and s(b) and not s(a * b):
                return WitnessReport("s-closure", {"bound": bound}, False, {"a": a, "b": b, "kind": "product"})
            if s(a * b) and not s(a):
                return WitnessReport("s-closure", {"bound": bound}, False, {"a": a, "b": b, "kind": "saturation"})
    return WitnessReport("s-closure", {"bound": bound}, True)


# --- Gelfand / avoidable definitions --------------------------------------


def _int_divisor_pairs(a: int) -> list[tuple[int, int]]:
    pairs = []
    for d in _divisors(abs(a)):
        for sign in (1, -1):
            r = sign * d
            pairs.append((r, a // r))
    return pairs


def _int_contexts(a: int, bound: int):
    for b in range(-bound, bound + 1):
        for c in range(-bound, bound + 1):
            if gcd(gcd(a, b), c) == 1:
                yield b, c


def _check_int_def(a: int, bound: int, avoidable: bool, name: str) -> WitnessReport:
    if a == 0:
        raise PreconditionError(f"{name} needs a nonzero element")
    pairs = _int_divisor_pairs(a)
    for b, c in _int_contexts(a, bound):
        ok = any(
            gcd(r, b) == 1 and gcd(s, c) == 1 and (not avoidable or gcd(r, s) == 1)
            for r, s in pairs
        )
        if not ok:
            return WitnessReport(name, {"ring": "integers", "a": str(a), "bound": bound}, False, {"b": str(b), "c": str(c)})
    return WitnessReport(name, {"ring": "integers", "a": str(a), "bound": bound}, True)


def check_avoidable_def(a: int, bound: int = DEFAULT_BOUND) -> WitnessReport:
    """Every unimodular ``(a, b, c)`` with ``|b|, |c| <= bound`` admits ``a = r*s``
    with ``r`` coprime to ``b``, ``s`` coprime to ``c`` and ``r`` coprime to ``s``."""
    return _check_int_def(int(a), bound, True, "avoidable")


def _normalized(h: RatPoly) -> RatPoly:
    return h.scale(1 / h.constant)


def _small_rationals(cap: int) -> list[Rational]:
    vals = {Rational(n, d) for n in range(1, cap + 1) for d in range(1, cap + 1)}
    return sorted(vals | {-v for v in vals})


def henriksen_divisor_family(a: RatPoly, contexts=(), cap: int = 4) -> list[RatPoly]:
    """Divisors of ``a`` in H of the shape ``q * x^j * h``.

    ``h`` runs over 1, the x-free part of ``a`` and Q[x] gcds of that part with
    powers of the context elements (and their cofactors), normalized to
    ``h(0) = 1``; ``q`` over small rationals and the divisors of ``a(0)``.
    """
    k, a_star = a.strip_x()
    hs = {RatPoly.const(1), _normalized(a_star)}
    for ctx in contexts:
        if ctx.is_zero():
            continue
        power = RatPoly.const(1)
        for _ in range((a.degree or 0) + 1):
            power = power * ctx
            h = poly_xgcd_field(a_star, power)[0]
            if h.constant:
                h = _normalized(h)
                hs.add(h)
                hs.add(_normalized(poly_divrem(a_star, h)[0]))
    scalars = set(_small_rationals(cap))
    if a.constant:
        z = abs(int(a.constant))
        scalars |= {Rational(s * d) for d in _divisors(z) for s in (1, -1)}
    out = []
    seen = set()
    for h in sorted(hs, key=lambda p: (len(p), str(p))):
        for j in range(k + 1):
            base = h.shift(j)
            for q in sorted(scalars):
                e = base.scale(q)
                if e.constant.denominator != 1 or e in seen:
                    continue
                quo, rem = poly_divrem(a, e)
                if rem.is_zero() and quo.constant.denominator == 1:
                    seen.add(e)
                    out.append(e)
    return out


def _family_split(a: RingElement, b: RingElement, c: RingElement, cap: int):
    fam = henriksen_divisor_family(a.value, (b.value, c.value), cap)
    for e in fam:
        r = RingElement(RingId.HENRIKSEN, e)
        s = exact_div(a, r)
        for rr, ss in ((r, s), (s, r)):
            if coprime(rr, b) and coprime(ss, c):
                return rr, ss
    return None


def _random_henriksen(rng: random.Random, max_deg: int = 2, cap: int = 6) -> RingElement:
    deg = rng.randint(0, max_deg)
    coeffs = [Rational(rng.randint(-cap, cap))]
    for _ in range(deg):
        coeffs.append(Rational(rng.randint(-cap, cap), rng.randint(1, cap)))
    return RingElement(RingId.HENRIKSEN, RatPoly(coeffs))


def henriksen_contexts(a: RingElement, samples: int, seed: int):
    """``(2, 3)`` followed by random unimodular contexts for ``a``."""
    two, three = (parse_element(RingId.HENRIKSEN, s) for s in ("2", "3"))
    yield two, three
    rng = random.Random(seed)
    produced = 1
    attempts = 0
    while produced < samples and attempts < 50 * samples:
        attempts += 1
        b, c = _random_henriksen(rng), _random_henriksen(rng)
        if is_unit(gcd_many([a, b, c])[0]):
            produced += 1
            yield b, c


def check_gelfand_def(
    ring,
    a,
    bound: int = DEFAULT_BOUND,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    cap: int = 4,
) -> WitnessReport:
    """Search for a context ``(b, c)`` in which ``a`` has no split ``a = r*s``.

    Over Z every context with ``|b|, |c| <= bound`` is tried against every
    divisor pair of ``a``.  Over H, ``samples`` contexts are tried: first by
    :func:`~bezout_snf.gelfand.gelfand_factor` (re-certified), then by the
    structured divisor family.  A context where both miss is the witness.
    """
    ring = ring_id(ring)
    if isinstance(a, str):
        a = parse_element(ring, a)
    elif not isinstance(a, RingElement):
        a = RingElement(ring, a)
    if a.is_zero():
        raise PreconditionError("check_gelfand_def needs a nonzero element")
    if ring is RingId.INTEGERS:
        return _check_int_def(a.value, bound, False, "gelfand")
    if ring is not RingId.HENRIKSEN:
        raise PreconditionError("check_gelfand_def supports integers and henriksen")

    from .gelfand import gelfand_factor

    params = {"ring": ring.value, "a": str(a), "samples": samples, "seed": seed}
    for b, c in henriksen_contexts(a, samples, seed):
        split = None
        try:
            fac = gelfand_factor(a, b, c)
            if fac.r * fac.s == a and coprime(fac.r, b) and coprime(fac.s, c):
                split = (fac.r, fac.s)
        except AlgebraError:
            pass
        if split is None:
            split = _family_split(a, b, c, cap)
        if split is None:
            return WitnessReport("gelfand", params, False, {"b": str(b), "c": str(c), "family_cap": cap})
    return WitnessReport("gelfand", params, True)


# --- witness re-validation ------------------------------------------------


def _henriksen_no_split(a: RingElement, b: RingElement, c: RingElement) -> bool:
    """Ideal-theoretic proof that ``a`` has no split in context ``(b, c)``.

    Applies when ``a(0) = 0`` and ``b``, ``c`` are non-unit nonzero integers:
    in any ``a = r*s`` one factor has zero constant term, and every nonzero
    integer divides such a factor, so it cannot be coprime to ``b`` (or ``c``).
    """
    if a.value.constant != 0:
        return False
    for e in (b, c):
        if not e.value.is_constant() or e.is_zero() or is_unit(e):
            return False
    return is_unit(gcd_many([a, b, c])[0])


def revalidate(report: WitnessReport) -> bool:
    """Independently re-check the witness of a negative report."""
    if report.verdict:
        return True
    w, p = report.witness, report.params
    if w is None:
        return False
    check = report.check
    if check == "s-member" and p["a"] == 0:
        b, c = w["b"], w["c"]
        # 2 + 5t = ±1 has no integer solution
        return gcd(b, c) == 1 and all((target - b) % c != 0 for target in (1, -1))
    if check in ("sr1", "s-member"):
        n = p.get("n", abs(p.get("a", 0)))
        a, b = w["a"], w["b"]
        return gcd(gcd(a, b), n) == 1 and all(gcd(a + b * t, n) != 1 for t in range(n))
    if check == "pm":
        st = zmod_structure(p["n"])
        return len([m for m in st.maximals if w["prime"] % m == 0]) != 1
    if check == "clean":
        n, a = p["n"], w["a"]
        idem = [e for e in range(n) if e * e % n == e]
        return all(gcd((a - e) % n, n) != 1 for e in idem)
    if check in ("gelfand", "avoidable"):
        ring = ring_id(p["ring"])
        a = parse_element(ring, p["a"])
        b = parse_element(ring, w["b"])
        c = parse_element(ring, w["c"])
        if ring is RingId.INTEGERS:
            av, bv, cv = a.value, b.value, c.value
            if gcd(gcd(av, bv), cv) != 1:
                return False
            return not any(
                gcd(r, bv) == 1 and gcd(s, cv) == 1 and (check == "gelfand" or gcd(r, s) == 1)
                for r, s in _int_divisor_pairs(av)
            )
        return _henriksen_no_split(a, b, c)
    if check == "s-closure":
        a, b = w["a"], w["b"]
        sa, sb, sab = (s_member_int(v).verdict for v in (a, b, a * b))
        return (sa and sb and not sab) if w["kind"] == "product" else (sab and not sa)
    return False


# --- integer Smith form oracle ---------------------------------------------


def euclid_snf_diagonal(rows) -> list[int]:
    """Smith diagonal of an integer matrix by smallest-pivot Euclidean elimination.

    Deliberately shares no code with :mod:`bezout_snf.matrix`: no extended gcd,
    only division with remainder, swaps and row additions.
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    t = 0
    while t < min(m, n):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        p = A[t][t]
        clean = True
        for i in range(t + 1, m):
            f = A[i][t] // p
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[t])]
            clean = clean and A[i][t] == 0
        for j in range(t + 1, n):
            f = A[t][j] // p
            if f:
                for row in A:
                    row[j] -= f * row[t]
            clean = clean and A[t][j] == 0
        if not clean:
            continue
        bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
        if bad is not None:
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
            continue
        t += 1
    return [abs(A[i][i]) for i in range(t)] + [0] * (min(m, n) - t)


def _int_det(M) -> int:
    n = len(M)
    if n == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _int_det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(n) if M[0][j])


def determinantal_divisor(rows, k: int) -> int:
    """Gcd of all ``k x k`` minors of an integer matrix."""
    m, n = len(rows), len(rows[0])
    g = 0
    for ri in combinations(range(m), k):
        for ci in combinations(range(n), k):
            g = gcd(g, _int_det([[rows[i][j] for j in ci] for i in ri]))
    return g
