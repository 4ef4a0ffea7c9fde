"""Command line entry point.

Exit codes: 0 success, 1 verification or I/O failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .classifier import classify
from .rh_core import COMPLEX, REAL, HalfInteger, rho, rho_c, sigma
from .spacefile import SpaceFormatError, dumps, loads
from .spaces import build_space, validate_query
from .verifier import verify_space

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TABLE_COLUMNS = ("n", "k", "sigma", "lower", "upper", "status", "rule")


class UsageError(Exception):
    pass


def _half_integer(text: str) -> HalfInteger:
    t = text.strip()
    if not t or any(ch in t for ch in ".eE_ "):
        raise UsageError(f"not an integer or p/2 literal: {text!r}")
    try:
        value = HalfInteger.of(Fraction(t))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{text!r}: {exc}") from None
    if value.numerator <= 0:
        raise UsageError(f"argument must be positive, got {text!r}")
    return value


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False))


def _field(args) -> str:
    return COMPLEX if getattr(args, "hermitian", False) or getattr(args, "complex", False) else REAL


def _query(args) -> tuple[str, int, int]:
    field = _field(args)
    try:
        validate_query(field, args.n, args.s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return field, args.n, args.s


def cmd_rho(args) -> int:
    r = _half_integer(args.r)
    print(rho_c(r) if args.complex else rho(r))
    return EXIT_OK


def cmd_sigma(args) -> int:
    try:
        print(sigma(args.n, args.h, _field(args)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_classify(args) -> int:
    field, n, s = _query(args)
    _emit_json(classify(field=field, n=n, s=s).to_json())
    return EXIT_OK


def cmd_construct(args) -> int:
    field, n, s = _query(args)
    space = build_space(field, n, s)
    text = dumps(space)
    if args.output in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    kind = space.certificate.kind if space.certificate else "none"
    print(f"wrote {args.output}: n={n} rank={space.rank} dim={space.dimension} certificate={kind}", file=sys.stderr)
    return EXIT_OK


def _default_seed() -> int:
    raw = os.environ.get("RH_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"RH_SEED must be an integer, got {raw!r}") from None


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.samples < 0:
        raise UsageError("--samples must be >= 0")
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    try:
        space = loads(text)
    except SpaceFormatError as exc:
        raise UsageError(f"malformed space file: {exc}") from None
    report = verify_space(space, samples=args.samples, seed=seed)
    _emit_json(report.to_json())
    if not report.passed:
        reason = report.certificate_reason or "sampled rank or signature check failed"
        print(f"verification failed: {reason}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def table_rows(max_n: int, s: int, field: str) -> list[dict]:
    rows = []
    for n in range(s + 1, max_n + 1):
        rep = classify(field=field, n=n, s=s)
        rows.append({"n": n, "k": rep.k, "sigma": rep.sigma, "lower": rep.lower,
                     "upper": rep.upper, "status": rep.status, "rule": rep.rule})
    return rows


def format_table(rows: list[dict], fmt: str) -> str:
    if fmt == "tsv":
        lines = ["\t".join(TABLE_COLUMNS)]
        lines += ["\t".join(str(r[c]) for c in TABLE_COLUMNS) for r in rows]
    else:
        lines = ["| " + " | ".join(TABLE_COLUMNS) + " |", "|" + "---|" * len(TABLE_COLUMNS)]
        lines += ["| " + " | ".join(str(r[c]) for c in TABLE_COLUMNS) + " |" for r in rows]
    return "\n".join(lines)


def cmd_table(args) -> int:
    field = _field(args)
    if args.max_n < 2:
        raise UsageError("--max-n must be at least 2")
    try:
        validate_query(field, args.s + 1, args.s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(format_table(table_rows(args.max_n, args.s, field), args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rhspaces",
        description="Radon-Hurwitz bounds and certified constant-rank spaces of symmetric/hermitian matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rho", help="Radon-Hurwitz number of r (integer or p/2)")
    p.add_argument("r")
    p.add_argument("--complex", action="store_true", help="complex Radon-Hurwitz number")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("sigma", help="window maximum sigma(n, h)")
    p.add_argument("n", type=int)
    p.add_argument("h", type=int)
    p.add_argument("--complex", action="store_true")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("classify", help="bounds on the maximal dimension of a rank n-s space")
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    p.add_argument("--hermitian", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="build a certified space and write it as JSON")
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    p.add_argument("--hermitian", action="store_true")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a space file")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=None, help="sampling seed (default: $RH_SEED or 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tabulate bounds for n = s+1 .. max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--s", type=int, choices=(0, 1, 2), default=0)
    p.add_argument("--hermitian", action="store_true")
    p.add_argument("--format", choices=("tsv", "md"), default="tsv")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
