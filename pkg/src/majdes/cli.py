"""``majdes`` command line: distributions, closed forms, and verification sweeps.

Exit codes: 0 success / all checks pass, 1 counterexample found, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from majdes import checks
from majdes.formulas import a_polynomial, catalan_top_term, f_three_row, f_two_row, related_distribution
from majdes.perm import Permutation, distribution

PATTERNS = ("123", "132", "213", "231", "312", "321")
DERIVABLE = ("123", "213", "231", "312")


class UsageError(Exception):
    pass


def _emit(obj_text: str, obj_json: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj_json))
    else:
        print(obj_text)


def cmd_dist(args) -> int:
    if args.n < 1:
        raise UsageError("-n must be at least 1")
    if args.mode == "derived":
        if args.pattern not in DERIVABLE:
            raise UsageError(f"--mode derived supports {', '.join(DERIVABLE)} only")
        F = related_distribution(args.pattern, args.n)
    else:
        F = distribution(args.n, Permutation.parse(args.pattern))
    _emit(F.to_text(), F.to_json(n=args.n, pattern=args.pattern), args.format)
    return 0


def _need(args, *names: str) -> None:
    missing = [f"-{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"formula {args.which} needs {' '.join(missing)}")


def cmd_formula(args) -> int:
    try:
        if args.which == "f2":
            _need(args, "n", "k", "i")
            p = f_two_row(args.n, args.k, args.i)
        elif args.which == "f3":
            _need(args, "m", "k", "i")
            p = f_three_row(args.m, args.k, args.i)
        elif args.which == "A":
            _need(args, "n", "i")
            p = a_polynomial(args.n, args.i)
        else:
            _need(args, "n")
            p = catalan_top_term(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(p.to_text(), p.to_json(), args.format)
    return 0


def cmd_check(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    report = checks.run_suite(args.suite, args.max_n, out=args.out, resume=args.resume)
    summary = (f"{report.check_name} max_n={args.max_n}: {report.verdict} "
               f"({report.tuples_checked}/{report.tuples_total} tuples, "
               f"{len(report.counterexamples)} counterexamples)")
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(summary)
        for cx in report.counterexamples[:20]:
            print(f"  {cx['parameters']}: expected {cx['expected']} got {cx['actual']}")
    return 0 if report.verdict == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="majdes", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="bivariate (maj, des) distribution over an avoidance class")
    d.add_argument("--pattern", required=True, choices=PATTERNS)
    d.add_argument("-n", type=int, required=True)
    d.add_argument("--mode", choices=("direct", "derived"), default="direct")
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.set_defaults(func=cmd_dist)

    f = sub.add_parser("formula", help="evaluate a closed form")
    f.add_argument("which", choices=("f2", "f3", "A", "catalan"))
    f.add_argument("-n", type=int)
    f.add_argument("-m", type=int)
    f.add_argument("-k", type=int)
    f.add_argument("-i", type=int)
    f.add_argument("--format", choices=("text", "json"), default="text")
    f.set_defaults(func=cmd_formula)

    c = sub.add_parser("check", help="run a verification sweep and write a JSON report")
    c.add_argument("--suite", required=True, choices=sorted(checks.SUITES))
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--out", help="report path (JSON)")
    c.add_argument("--resume", action="store_true", help="skip tuples already recorded in --out")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"majdes: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
