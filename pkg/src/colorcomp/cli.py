"""Command line interface: ``colorcomp {count,enumerate,map,verify}``.

Exit codes: 0 ok, 2 usage or parse error, 3 counting methods disagree,
4 validation failure, 5 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import counting, enumeration, oeis
from .bijection import to_colored, to_domino
from .core import ColorLaw, ColoredComposition, DominoComposition, ValidationError, dumps

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISAGREE = 3
EXIT_INVALID = 4
EXIT_MISMATCH = 5

METHODS = ("closed", "recurrence", "transform", "partition", "enumerate")


class UsageError(Exception):
    pass


def _law(args) -> ColorLaw:
    try:
        return ColorLaw(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _count(method: str, law: ColorLaw, nu: int, k: Optional[int]) -> int:
    if method == "closed":
        return counting.count_total_closed(law, nu) if k is None else counting.count_parts_closed(law, nu, k)
    if method == "partition":
        w = law.weights(nu)
        ks = range(1, nu + 1) if k is None else [k]
        return sum(counting.count_parts_partition(w, nu, kk) for kk in ks)
    if method == "enumerate":
        if law.b < 0:
            raise UsageError("enumerate needs b >= 0")
        w = law.weights(nu)
        ks = range(1, nu + 1) if k is None else [k]
        return sum(sum(1 for _ in enumeration.iter_colored_parts(w, nu, kk)) for kk in ks)
    if k is not None:
        raise UsageError(f"method {method} counts totals only; drop --k")
    if method == "recurrence":
        return counting.count_total_recurrence(law, nu)
    return counting.invert_transform(law.weights(nu), nu)[-1]


def cmd_count(args, out) -> int:
    law = _law(args)
    if args.nu < 1 or (args.k is not None and args.k < 1):
        raise UsageError("--nu and --k must be >= 1")
    if not args.all_methods:
        print(_count(args.method, law, args.nu, args.k), file=out)
        return EXIT_OK
    results = {}
    for method in METHODS:
        if args.k is not None and method in ("recurrence", "transform"):
            continue
        if law.b < 0 and method == "enumerate":
            continue
        results[method] = _count(method, law, args.nu, args.k)
        print(f"{method} {results[method]}", file=out)
    if len(set(results.values())) > 1:
        print("DISAGREE", file=out)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    law = _law(args)
    if law.b < 0:
        raise UsageError("enumeration needs b >= 0")
    if args.nu < 1 or args.k < 1:
        raise UsageError("--nu and --k must be >= 1")
    if args.kind == "colored":
        if args.j is not None:
            raise UsageError("--j applies to --kind domino only")
        stream = enumeration.enumerate_colored_law(law, args.nu, args.k)
    else:
        if args.j is not None and not 0 <= args.j <= args.k:
            raise UsageError("--j must satisfy 0 <= j <= k")
        stream = enumeration.enumerate_domino(law, args.nu, args.k, args.j)
    total = 0
    for obj in stream:
        out.write(dumps(obj) + "\n")
        total += 1
    out.write(f"# total {total}\n")
    return EXIT_OK


def cmd_map(args, out, stdin) -> int:
    law = _law(args)
    if law.b < 0:
        raise UsageError("the bijection needs b >= 0")
    if law.a == 0 and law.b == 0:
        raise UsageError("a = b = 0 admits no compositions")
    try:
        obj = json.loads(stdin.read())
        if not isinstance(obj, dict):
            raise ValueError("expected a JSON object")
        if args.direction == "phi":
            src = DominoComposition.from_json(obj)
        else:
            src = ColoredComposition.from_json(obj)
    except ValidationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        raise UsageError(f"cannot parse input: {exc}") from None
    try:
        result = to_colored(src, law) if args.direction == "phi" else to_domino(src, law)
    except ValidationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    out.write(dumps(result) + "\n")
    return EXIT_OK


def _report(checks, out) -> bool:
    for check in checks:
        print(check.line(), file=out)
    return all(c.ok for c in checks)


def cmd_verify(args, out) -> int:
    if args.fibonacci:
        if args.max_nu is None or args.max_nu < 1:
            raise UsageError("--fibonacci needs --max-nu >= 1")
        ok = True
        for nu in range(1, args.max_nu + 1):
            lhs, rhs = counting.fibonacci_identity_check(nu)
            status = "PASS" if lhs == rhs else "FAIL"
            ok &= lhs == rhs
            print(f"{status} nu={nu} fibonacci={lhs} sum={rhs}", file=out)
        print(f"# {'ok' if ok else 'mismatch'}", file=out)
        return EXIT_OK if ok else EXIT_MISMATCH

    if args.manifest:
        try:
            fixtures = oeis.load_manifest(args.manifest)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"bad manifest: {exc}") from None
        ok = True
        for fx in fixtures:
            print(f"# {fx.sequence} a={fx.a} b={fx.b} offset={fx.offset}", file=out)
            try:
                bfile = oeis.read_bfile(fx.path)
            except oeis.BFileError as exc:
                raise UsageError(str(exc)) from None
            ok &= _report(oeis.verify_bfile(bfile, fx.law, fx.offset, fx.terms), out)
        print(f"# {'ok' if ok else 'mismatch'}", file=out)
        return EXIT_OK if ok else EXIT_MISMATCH

    if not args.fixture or args.a is None or args.b is None or args.offset is None:
        raise UsageError("verify needs --fixture, --a, --b and --offset (or --fibonacci / --manifest)")
    law = _law(args)
    try:
        bfile = oeis.read_bfile(args.fixture)
    except oeis.BFileError as exc:
        raise UsageError(str(exc)) from None
    checks = oeis.verify_bfile(bfile, law, args.offset, args.terms)
    if not checks:
        raise UsageError("no b-file entries at or after the offset")
    ok = _report(checks, out)
    print(f"# {'ok' if ok else 'mismatch'}", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorcomp", description="Count, list and map (an+b)-color compositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact count of compositions")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--k", type=int, help="number of parts; total over k if omitted")
    p.add_argument("--method", choices=METHODS, default="closed")
    p.add_argument("--all-methods", action="store_true", help="run every applicable method and compare")

    p = sub.add_parser("enumerate", help="list compositions as JSON lines")
    p.add_argument("--kind", choices=("colored", "domino"), required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, help="restrict dominoes to j nonzero tiles")

    p = sub.add_parser("map", help="apply phi (domino -> colored) or psi (colored -> domino) to stdin")
    p.add_argument("--direction", choices=("phi", "psi"), required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("verify", help="check totals against OEIS b-files or the Fibonacci identity")
    p.add_argument("--fixture", help="path to a b-file")
    p.add_argument("--manifest", help="JSON manifest listing several b-files")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--offset", type=int, help="b-file index that holds W_1")
    p.add_argument("--terms", type=int)
    p.add_argument("--fibonacci", action="store_true")
    p.add_argument("--max-nu", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, stdin=None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "count":
            return cmd_count(args, out)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "map":
            return cmd_map(args, out, stdin)
        return cmd_verify(args, out)
    except UsageError as exc:
        print(f"colorcomp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
