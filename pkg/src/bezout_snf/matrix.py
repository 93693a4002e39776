"""Diagonal reduction of matrices over the three Bezout domains.

The 2x2 core (:func:`reduce_triangular_2x2`) follows the Gelfand-range-one
argument step by step and records every intermediate in a
:class:`ReductionTrace`.  :func:`smith_normal_form` handles arbitrary shapes:
gcd elimination to a diagonal, then divisibility repair of diagonal pairs
routed through the 2x2 core.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, fields
from typing import Iterable, Sequence

from .errors import (
    AlgebraError,
    CertificationError,
    NotCoprimeError,
    PreconditionError,
    SweepBoundError,
    with_stage,
)
from .gelfand import gelfand_factor, gelfand_shift
from .rings import (
    RingElement,
    RingId,
    canonical_unit,
    chain_bound,
    coprime,
    divides,
    embed,
    exact_div,
    gcd_many,
    is_unit,
    one,
    parse_element,
    ring_id,
    xgcd,
    zero,
)


def _coerce(ring: RingId, e) -> RingElement:
    if isinstance(e, RingElement):
        return e
    if isinstance(e, str):
        return parse_element(ring, e)
    return embed(ring, e)


class Matrix:
    """Immutable dense matrix over one ring, stored row-major."""

    __slots__ = ("ring", "nrows", "ncols", "entries")

    def __init__(self, ring: RingId, nrows: int, ncols: int, entries: Iterable[RingElement]):
        self.ring = RingId(ring)
        self.nrows = nrows
        self.ncols = ncols
        self.entries = tuple(entries)
        if len(self.entries) != nrows * ncols:
            raise PreconditionError(f"{nrows}x{ncols} matrix needs {nrows * ncols} entries, got {len(self.entries)}")
        for e in self.entries:
            if e.ring is not self.ring:
                raise PreconditionError(f"entry {e} is not in {self.ring}")

    @classmethod
    def from_rows(cls, ring, rows: Sequence[Sequence]) -> Matrix:
        ring = RingId(ring)
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise PreconditionError("ragged matrix rows")
        entries = [_coerce(ring, e) for row in rows for e in row]
        return cls(ring, nrows, ncols, entries)

    @classmethod
    def identity(cls, ring, n: int) -> Matrix:
        ring = RingId(ring)
        o, z = one(ring), zero(ring)
        return cls(ring, n, n, [o if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, ring, nrows: int, ncols: int) -> Matrix:
        return cls(ring, nrows, ncols, [zero(ring)] * (nrows * ncols))

    @classmethod
    def diagonal(cls, ring, values: Sequence, nrows: int | None = None, ncols: int | None = None) -> Matrix:
        ring = RingId(ring)
        nrows = len(values) if nrows is None else nrows
        ncols = len(values) if ncols is None else ncols
        rows = [[zero(ring)] * ncols for _ in range(nrows)]
        for i, v in enumerate(values):
            rows[i][i] = _coerce(ring, v)
        return cls.from_rows(ring, rows)

    def __getitem__(self, ij: tuple[int, int]) -> RingElement:
        i, j = ij
        return self.entries[i * self.ncols + j]

    def rows(self) -> list[list[RingElement]]:
        return [list(self.entries[i * self.ncols:(i + 1) * self.ncols]) for i in range(self.nrows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring, self.shape, self.entries) == (other.ring, other.shape, other.entries)

    def __hash__(self) -> int:
        return hash((self.ring, self.shape, self.entries))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ring is not other.ring:
            raise PreconditionError("matrix product across rings")
        if self.ncols != other.nrows:
            raise PreconditionError(f"shape mismatch {self.shape} @ {other.shape}")
        z = zero(self.ring)
        out = []
        for i in range(self.nrows):
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self[i, k]
                    if a.is_zero():
                        continue
                    b = other[k, j]
                    if not b.is_zero():
                        acc = acc + a * b
                out.append(acc)
        return Matrix(self.ring, self.nrows, other.ncols, out)

    def transpose(self) -> Matrix:
        return Matrix(self.ring, self.ncols, self.nrows, [self[i, j] for j in range(self.ncols) for i in range(self.nrows)])

    def is_diagonal(self) -> bool:
        return all(self[i, j].is_zero() for i in range(self.nrows) for j in range(self.ncols) if i != j)

    def diagonal_entries(self) -> list[RingElement]:
        return [self[i, i] for i in range(min(self.nrows, self.ncols))]

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.rows()]

    def to_json(self) -> dict:
        return {"ring": self.ring.value, "rows": self.to_strings()}

    @classmethod
    def from_json(cls, data: dict) -> Matrix:
        from .errors import ParseError

        if not isinstance(data, dict) or "ring" not in data or "rows" not in data:
            raise ParseError("matrix JSON needs 'ring' and 'rows'")
        rows = data["rows"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError("'rows' must be a list of lists")
        if not all(isinstance(e, str) for r in rows for e in r):
            raise ParseError("matrix entries must be element strings")
        ring = ring_id(data["ring"])
        if any(len(r) != len(rows[0]) for r in rows):
            raise ParseError("ragged matrix rows")
        return cls.from_rows(ring, rows)

    def __repr__(self) -> str:
        return f"Matrix({self.ring.value}, {self.to_strings()})"


def det(A: Matrix) -> RingElement:
    """Determinant by cofactor expansion along the first row."""
    if A.nrows != A.ncols:
        raise PreconditionError(f"determinant of a non-square {A.nrows}x{A.ncols} matrix")
    return _det_rows(A.rows(), A.ring)


def _det_rows(rows: list[list[RingElement]], ring: RingId) -> RingElement:
    n = len(rows)
    if n == 0:
        return one(ring)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = zero(ring)
    for j, a in enumerate(rows[0]):
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = a * _det_rows(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


# --- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class ReductionTrace:
    """Every intermediate of the 2x2 reduction of ``[[a, 0], [b, c]]``."""

    a: RingElement
    b: RingElement
    c: RingElement
    x: RingElement
    y: RingElement
    z: RingElement
    t: RingElement
    d: RingElement
    r: RingElement
    s: RingElement
    p: RingElement
    k: RingElement
    q: RingElement
    delta: RingElement
    p1: RingElement
    q1: RingElement
    u: RingElement
    v: RingElement

    def identities(self) -> dict[str, bool]:
        a, b, c, d = self.a, self.b, self.c, self.d
        return {
            "bezout_xyz": a * self.x + b * self.y + c * self.z == 1,
            "shift": d == b + (a * self.x + c * self.z) * self.t,
            "split": d == self.r * self.s,
            "sp_ck": self.s * self.p + c * self.k == 1,
            "q_rk": self.q == self.r * self.k,
            "delta": (
                self.p == self.p1 * self.delta
                and self.q == self.q1 * self.delta
                and xgcd(self.p, self.q).g == self.delta
            ),
            "kaplansky_row": (a * self.p1) * self.u + (d * self.p1 + c * self.q1) * self.v == 1,
        }

    def to_json(self) -> dict:
        return {f.name: str(getattr(self, f.name)) for f in fields(self)}


CHECK_NAMES = ("product_ok", "diagonal_ok", "chain_ok", "detP_unit", "detQ_unit")


@dataclass(frozen=True)
class SnfCertificate:
    """``P @ A @ Q == D`` with ``D`` diagonal, divisibility chain, unimodular ``P`` and ``Q``."""

    P: Matrix
    D: Matrix
    Q: Matrix
    input_hash: str
    checks: dict = field(default_factory=dict)
    trace: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(self.checks.get(n, False) for n in CHECK_NAMES)

    def to_json(self) -> dict:
        return {
            "ring": self.D.ring.value,
            "input_hash": self.input_hash,
            "P": self.P.to_strings(),
            "D": self.D.to_strings(),
            "Q": self.Q.to_strings(),
            "checks": {n: bool(self.checks.get(n, False)) for n in CHECK_NAMES},
            "trace": self.trace,
        }

    @classmethod
    def from_json(cls, data: dict) -> SnfCertificate:
        from .errors import ParseError

        try:
            ring = ring_id(data["ring"])
            P = Matrix.from_rows(ring, data["P"])
            D = Matrix.from_rows(ring, data["D"])
            Q = Matrix.from_rows(ring, data["Q"])
        except (KeyError, TypeError, IndexError) as exc:
            raise ParseError(f"malformed certificate JSON: {exc}") from None
        checks = {n: bool(v) for n, v in dict(data.get("checks", {})).items()}
        return cls(P, D, Q, str(data.get("input_hash", "")), checks, dict(data.get("trace", {})))


def matrix_digest(A: Matrix) -> str:
    payload = json.dumps(A.to_json(), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(payload.encode()).hexdigest()


def verify_snf(A: Matrix, cert: SnfCertificate) -> dict[str, bool]:
    """Recompute every certificate check from scratch."""
    P, D, Q = cert.P, cert.D, cert.Q
    if {P.ring, D.ring, Q.ring} != {A.ring}:
        raise PreconditionError("certificate and matrix are over different rings")
    shapes_ok = P.shape == (A.nrows, A.nrows) and Q.shape == (A.ncols, A.ncols) and D.shape == A.shape
    if not shapes_ok:
        raise PreconditionError(
            f"certificate shapes P{P.shape} D{D.shape} Q{Q.shape} do not fit a {A.nrows}x{A.ncols} matrix"
        )
    diag = D.diagonal_entries()
    return {
        "product_ok": P @ A @ Q == D,
        "diagonal_ok": D.is_diagonal(),
        "chain_ok": all(divides(diag[i], diag[i + 1]) for i in range(len(diag) - 1)),
        "detP_unit": is_unit(det(P)),
        "detQ_unit": is_unit(det(Q)),
    }


# --- 2x2 pipeline ---------------------------------------------------------


def complete_unimodular(p: RingElement, q: RingElement) -> Matrix:
    """2x2 matrix with first row ``(p, q)`` and determinant 1."""
    cert = xgcd(p, q)
    if not is_unit(cert.g):
        raise NotCoprimeError(f"({p}, {q}) is not a unimodular row")
    # canonical unit gcd is 1, so p*u + q*v == 1 exactly
    return Matrix(p.ring, 2, 2, [p, q, -cert.v, cert.u])


def kaplansky_pq(a, d, c, r, s):
    """Column ``(p1, q1)`` making ``a*p1`` and ``d*p1 + c*q1`` coprime.

    Solves ``s*p + c*k = 1``, sets ``q = r*k`` (then ``d*p + c*q = r``), and
    strips ``delta = gcd(p, q)``.  Returns ``(p, k, q, delta, p1, q1, u, v)``
    where ``(a*p1)*u + (d*p1 + c*q1)*v == 1``.
    """
    if d != r * s:
        raise PreconditionError(f"kaplansky_pq: {d} != ({r})*({s})")
    if not coprime(r, a) or not coprime(s, c):
        raise PreconditionError("kaplansky_pq: need r coprime to a and s coprime to c")
    if not is_unit(gcd_many([a, d, c])[0]):
        raise PreconditionError("kaplansky_pq: (a, d, c) is not unimodular")

    sc = xgcd(s, c)
    p, k = sc.u, sc.v
    q = r * k
    pq = xgcd(p, q)
    delta, p1, q1 = pq.g, pq.a1, pq.b1
    left, right = a * p1, d * p1 + c * q1
    row = xgcd(left, right)
    if not is_unit(row.g) or left * row.u + right * row.v != 1:
        raise CertificationError(f"kaplansky_pq: ({left}, {right}) is not unimodular")
    return p, k, q, delta, p1, q1, row.u, row.v


def _mat2(ring, a, b, c, d) -> Matrix:
    return Matrix(ring, 2, 2, [a, b, c, d])


def reduce_triangular_2x2(a: RingElement, b: RingElement, c: RingElement) -> tuple[SnfCertificate, ReductionTrace]:
    """Diagonalize ``[[a, 0], [b, c]]`` for a unimodular triple ``(a, b, c)``.

    Returns a certificate with ``D = diag(1, canonical(a*c))`` and the full
    trace of intermediates.
    """
    ring = a.ring
    A = _mat2(ring, a, zero(ring), b, c)
    stage = "bezout"
    try:
        g, (x, y, z) = gcd_many([a, b, c])
        if not is_unit(g):
            raise PreconditionError(f"({a}, {b}, {c}) is not unimodular: gcd is {g}")

        stage = "gelfand_shift"
        shift = gelfand_shift(b, a * x + c * z)
        t, d = shift.t, shift.d

        stage = "gelfand_factor"
        fac = gelfand_factor(d, a, c)
        r, s = fac.r, fac.s

        stage = "kaplansky_pq"
        p, k, q, delta, p1, q1, u, v = kaplansky_pq(a, d, c, r, s)

        stage = "assemble"
        o, zr = one(ring), zero(ring)
        L = _mat2(ring, o, zr, x * t, o)
        R = _mat2(ring, o, zr, z * t, o)
        Q2 = complete_unimodular(p1, q1).transpose()
        P2 = complete_unimodular(u, v)
        M = P2 @ _mat2(ring, a, zr, d, c) @ Q2
        if M[0, 0] != 1:
            raise CertificationError(f"corner entry is {M[0, 0]}, expected 1")
        E_row = _mat2(ring, o, zr, -M[1, 0], o)
        E_col = _mat2(ring, o, -M[0, 1], zr, o)
        w = canonical_unit(M[1, 1] - M[1, 0] * M[0, 1])
        scale = _mat2(ring, o, zr, zr, w)
        P = scale @ E_row @ P2 @ L
        Q = R @ Q2 @ E_col
        D = P @ A @ Q
    except AlgebraError as err:
        raise with_stage(err, stage) from err

    trace = ReductionTrace(a, b, c, x, y, z, t, d, r, s, p, k, q, delta, p1, q1, u, v)
    cert = SnfCertificate(P, D, Q, matrix_digest(A), trace={"reductions": [trace.to_json()]})
    checks = verify_snf(A, cert)
    cert = SnfCertificate(P, D, Q, cert.input_hash, checks, cert.trace)
    if not cert.ok:
        failed = [n for n, ok in checks.items() if not ok]
        raise with_stage(CertificationError(f"2x2 certificate failed: {failed}"), "verify")
    bad = [n for n, ok in trace.identities().items() if not ok]
    if bad:
        raise with_stage(CertificationError(f"trace identities failed: {bad}"), "verify")
    return cert, trace


# --- n x m driver ---------------------------------------------------------


def _row_op(M, i, j, a, b, c, d):
    """row_i, row_j <- a*row_i + b*row_j, c*row_i + d*row_j."""
    ri, rj = M[i], M[j]
    M[i] = [a * x + b * y for x, y in zip(ri, rj)]
    M[j] = [c * x + d * y for x, y in zip(ri, rj)]


def _col_op(M, i, j, a, b, c, d):
    """col_i, col_j <- a*col_i + b*col_j, c*col_i + d*col_j."""
    for row in M:
        x, y = row[i], row[j]
        row[i] = a * x + b * y
        row[j] = c * x + d * y


def _add_row_multiple(M, target, source, factor):
    M[target] = [x - factor * y for x, y in zip(M[target], M[source])]


def _add_col_multiple(M, target, source, factor):
    for row in M:
        row[target] = row[target] - factor * row[source]


def smith_normal_form(A: Matrix) -> SnfCertificate:
    """Certified Smith normal form ``P @ A @ Q == D`` of any matrix.

    Raises:
        SweepBoundError: a pivot kept growing past its divisor-chain bound.
        CertificationError: the final certificate failed re-verification.
    """
    ring = A.ring
    m, n = A.shape
    W = A.rows()
    P = Matrix.identity(ring, m).rows()
    Q = Matrix.identity(ring, n).rows()
    o = one(ring)
    sweeps = 0

    rank = 0
    for k in range(min(m, n)):
        pivot = next(((i, j) for i in range(k, m) for j in range(k, n) if not W[i][j].is_zero()), None)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != k:
            W[k], W[pi] = W[pi], W[k]
            P[k], P[pi] = P[pi], P[k]
        if pj != k:
            for M in (W, Q):
                for row in M:
                    row[k], row[pj] = row[pj], row[k]
        rank += 1

        bound = m * n + chain_bound(W[k][k])
        for sweep in range(bound + 1):
            _clear_column(W, P, k)
            dirty = _clear_row(W, Q, k)
            sweeps += 1
            if not dirty:
                break
        else:
            raise SweepBoundError(f"pivot {k} did not settle after {bound} sweeps")

    diag = [W[i][i] for i in range(rank)]
    repairs = []
    for i in range(rank):
        for j in range(i + 1, rank):
            if divides(W[i][i], W[j][j]):
                continue
            repairs.append(_repair_pair(W, P, Q, i, j))

    for i in range(rank):
        w = canonical_unit(W[i][i])
        if w != o:
            W[i] = [w * e for e in W[i]]
            P[i] = [w * e for e in P[i]]

    Pm = Matrix.from_rows(ring, P)
    Qm = Matrix.from_rows(ring, Q)
    Dm = Matrix(ring, m, n, [e for row in W for e in row])
    cert = SnfCertificate(Pm, Dm, Qm, matrix_digest(A), trace={"sweeps": sweeps, "pre_repair_diagonal": [str(e) for e in diag], "reductions": repairs})
    checks = verify_snf(A, cert)
    cert = SnfCertificate(Pm, Dm, Qm, cert.input_hash, checks, cert.trace)
    if not cert.ok:
        failed = [nm for nm, ok in checks.items() if not ok]
        raise CertificationError(f"Smith form certificate failed: {failed}")
    return cert


def _clear_column(W, P, k):
    """Zero column ``k`` below the pivot with row operations."""
    for i in range(k + 1, len(W)):
        x, y = W[k][k], W[i][k]
        if y.is_zero():
            continue
        if divides(x, y):
            f = exact_div(y, x)
            _add_row_multiple(W, i, k, f)
            _add_row_multiple(P, i, k, f)
            continue
        cert = xgcd(x, y)
        args = (cert.u, cert.v, -cert.b1, cert.a1)
        _row_op(W, k, i, *args)
        _row_op(P, k, i, *args)


def _clear_row(W, Q, k) -> bool:
    """Zero row ``k`` right of the pivot; True if column ``k`` got dirty."""
    dirty = False
    for j in range(k + 1, len(W[k])):
        x, y = W[k][k], W[k][j]
        if y.is_zero():
            continue
        if divides(x, y):
            f = exact_div(y, x)
            _add_col_multiple(W, j, k, f)
            _add_col_multiple(Q, j, k, f)
            continue
        cert = xgcd(x, y)
        args = (cert.u, cert.v, -cert.b1, cert.a1)
        _col_op(W, k, j, *args)
        _col_op(Q, k, j, *args)
        dirty = dirty or any(not W[i][k].is_zero() for i in range(k + 1, len(W)))
    return dirty


def _repair_pair(W, P, Q, i, j) -> dict:
    """Replace ``diag(d_i, d_j)`` by ``diag(gcd, lcm)`` via the 2x2 pipeline."""
    di, dj = W[i][i], W[j][j]
    o = one(di.ring)
    # column i += column j turns the block into [[di, 0], [dj, dj]]
    _col_op(W, i, j, o, o, zero(di.ring), o)
    _col_op(Q, i, j, o, o, zero(di.ring), o)
    g = xgcd(di, dj).g
    a1, b1 = exact_div(di, g), exact_div(dj, g)
    cert2, trace = reduce_triangular_2x2(a1, b1, b1)
    P2, Q2 = cert2.P, cert2.Q
    _row_op(W, i, j, P2[0, 0], P2[0, 1], P2[1, 0], P2[1, 1])
    _row_op(P, i, j, P2[0, 0], P2[0, 1], P2[1, 0], P2[1, 1])
    _col_op(W, i, j, Q2[0, 0], Q2[1, 0], Q2[0, 1], Q2[1, 1])
    _col_op(Q, i, j, Q2[0, 0], Q2[1, 0], Q2[0, 1], Q2[1, 1])
    return {"pair": [i, j], "scale": str(g), **trace.to_json()}
