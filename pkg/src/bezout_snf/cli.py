"""Command-line front end.

Exit codes: 0 success (including oracle findings with a counterexample),
2 parse error, 3 precondition violation, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracle
from .errors import InternalVerificationError, ParseError, PreconditionError, RingMismatchError
from .gelfand import gelfand_factor, gelfand_shift, is_gelfand
from .matrix import Matrix, SnfCertificate, matrix_digest, smith_normal_form, verify_snf
from .rings import RingId, parse_element, ring_id, xgcd

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(data, out: str | None) -> None:
    text = dumps(data)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc.msg}", exc.pos) from None


def _elements(args, *names):
    ring = ring_id(args.ring)
    return ring, [parse_element(ring, getattr(args, n)) for n in names]


def cmd_xgcd(args) -> int:
    ring, (a, b) = _elements(args, "a", "b")
    cert = xgcd(a, b)
    bad = cert.failures()
    if bad:
        raise InternalVerificationError(f"gcd certificate failed: {bad}")
    _emit(
        {
            "command": "xgcd",
            "ring": ring.value,
            **{k: str(getattr(cert, k)) for k in ("a", "b", "g", "u", "v", "a1", "b1")},
        },
        args.out,
    )
    return EXIT_OK


def cmd_gelfand_shift(args) -> int:
    ring, (a, b) = _elements(args, "a", "b")
    res = gelfand_shift(a, b)
    if res.d != a + b * res.t or not is_gelfand(res.d):
        raise InternalVerificationError("shift result failed re-verification")
    _emit({"command": "gelfand-shift", "ring": ring.value, "a": str(a), "b": str(b), "t": str(res.t), "d": str(res.d)}, args.out)
    return EXIT_OK


def cmd_gelfand_factor(args) -> int:
    ring, (d, a, c) = _elements(args, "d", "a", "c")
    fac = gelfand_factor(d, a, c)
    if not fac.is_valid():
        raise InternalVerificationError("factorization failed re-verification")
    _emit(
        {
            "command": "gelfand-factor",
            "ring": ring.value,
            "d": str(d),
            "a": str(a),
            "c": str(c),
            "r": str(fac.r),
            "s": str(fac.s),
            "iterations": fac.iterations,
        },
        args.out,
    )
    return EXIT_OK


def cmd_gelfand_check(args) -> int:
    ring, (a,) = _elements(args, "a")
    report = oracle.check_gelfand_def(ring, a, bound=args.bound, samples=args.samples, seed=args.seed)
    if not oracle.revalidate(report):
        raise InternalVerificationError("counterexample did not re-validate")
    _emit(report.to_json(), args.out)
    return EXIT_OK


def _load_matrix(path: str) -> Matrix:
    return Matrix.from_json(_load_json(path))


def cmd_snf(args) -> int:
    A = _load_matrix(args.input)
    if args.ring and ring_id(args.ring) is not A.ring:
        raise RingMismatchError(f"--ring {args.ring} but matrix is over {A.ring.value}")
    cert = smith_normal_form(A)
    recheck = verify_snf(A, cert)
    if not all(recheck.values()):
        raise InternalVerificationError(f"certificate failed re-verification: {recheck}")
    _emit(cert.to_json(), args.out)
    return EXIT_OK


def verify_file(cert_path: str, matrix_path: str, out: str | None = None) -> int:
    """Re-check a stored certificate against a stored matrix; returns an exit code."""
    A = _load_matrix(matrix_path)
    data = _load_json(cert_path)
    if not isinstance(data, dict):
        raise ParseError("certificate JSON must be an object")
    if "ring" in data and ring_id(data["ring"]) is not A.ring:
        raise RingMismatchError(f"certificate is over {data['ring']} but matrix is over {A.ring.value}")
    cert = SnfCertificate.from_json(data)
    checks = verify_snf(A, cert)
    hash_ok = cert.input_hash in ("", matrix_digest(A))
    report = {"command": "verify", "checks": checks, "input_hash_ok": hash_ok, "ok": all(checks.values()) and hash_ok}
    _emit(report, out)
    if not report["ok"]:
        failed = [k for k, v in checks.items() if not v] + ([] if hash_ok else ["input_hash"])
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    return verify_file(args.cert, args.input, args.out)


def cmd_oracle(args) -> int:
    kind = args.kind
    if kind in ("pm", "sr1", "clean"):
        if args.n is None:
            raise PreconditionError(f"oracle {kind} needs --n")
        fn = {"pm": oracle.is_pm_zmod, "sr1": oracle.is_sr1_zmod, "clean": oracle.is_clean_zmod}[kind]
        report = fn(args.n)
    elif kind == "s-member":
        if args.a is None:
            raise PreconditionError("oracle s-member needs --a")
        report = oracle.s_member_int(_int_arg(args.a))
    elif kind == "s-closure":
        report = oracle.s_closure_check(args.bound)
    else:
        if args.a is None:
            raise PreconditionError("oracle avoidable needs --a")
        report = oracle.check_avoidable_def(_int_arg(args.a), args.bound)
    if not oracle.revalidate(report):
        raise InternalVerificationError(f"{kind} witness did not re-validate")
    _emit(report.to_json(), args.out)
    return EXIT_OK


def _int_arg(text: str) -> int:
    return parse_element(RingId.INTEGERS, text).value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bezout-snf",
        description="Certified gcds, Gelfand splits and Smith normal forms over Z, Q[x] and Z + xQ[x].",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    rings = [r.value for r in RingId]

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--out", help="write JSON here instead of stdout")
        return p

    p = add("xgcd", cmd_xgcd, "extended gcd with certificate")
    p.add_argument("--ring", required=True, choices=rings)
    p.add_argument("a")
    p.add_argument("b")

    p = add("gelfand-shift", cmd_gelfand_shift, "find t in {0,1} with a + b*t Gelfand")
    p.add_argument("--ring", required=True, choices=rings)
    p.add_argument("a")
    p.add_argument("b")

    p = add("gelfand-factor", cmd_gelfand_factor, "split d = r*s against a context (a, c)")
    p.add_argument("--ring", required=True, choices=rings)
    p.add_argument("d")
    p.add_argument("a")
    p.add_argument("c")

    p = add("gelfand-check", cmd_gelfand_check, "brute-force the Gelfand definition for one element")
    p.add_argument("--ring", required=True, choices=rings)
    p.add_argument("a")
    p.add_argument("--bound", type=int, default=oracle.DEFAULT_BOUND)
    p.add_argument("--samples", type=int, default=oracle.DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)

    p = add("snf", cmd_snf, "Smith normal form certificate of a matrix file")
    p.add_argument("--ring", choices=rings)
    p.add_argument("--in", dest="input", required=True)

    p = add("verify", cmd_verify, "re-check a certificate against its matrix")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--cert", required=True)

    p = add("oracle", cmd_oracle, "finite-ring and S(Z) oracles")
    p.add_argument("kind", choices=["pm", "sr1", "clean", "s-member", "s-closure", "avoidable"])
    p.add_argument("--n", type=int)
    p.add_argument("--a")
    p.add_argument("--bound", type=int, default=oracle.DEFAULT_BOUND)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, ZeroDivisionError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalVerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
