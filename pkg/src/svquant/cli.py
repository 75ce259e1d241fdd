"""Command-line front end: ``svquant verify | expand | normalize``."""

from __future__ import annotations

import argparse
import sys

from . import twist
from .lie import TwistCase
from .parsing import ParseError, parse_element, parse_generator
from .verification import SUITES, SuiteConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def cmd_verify(args) -> int:
    names: list[str] = []
    for chunk in args.suite or ["all"]:
        names += [s.strip() for s in chunk.split(",") if s.strip()]
    explicit = "all" not in names
    suites = tuple(SUITES) if not explicit else tuple(dict.fromkeys(names))
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)} or all")
    n0 = _int_list(args.n0)
    if not n0:
        raise UsageError("--n0 needs at least one value")
    cfg = SuiteConfig(
        suites=suites,
        n0_values=n0,
        order=args.order,
        index_range=args.range,
        seed=args.seed,
        # an explicitly requested theorem2 must not silently drop even n0
        case2_n0_values=n0 if explicit and "theorem2" in suites else None,
        corrupt_brackets=args.corrupt_brackets,
    )
    problems = cfg.problems()
    if problems:
        raise UsageError("; ".join(problems))
    report = run_suite(cfg)
    text = report.dumps() if args.format == "json" else report.to_text()
    print(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report.dumps() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


_OPS = {
    "delta": twist.delta_twisted,
    "antipode": twist.antipode_twisted,
    "delta-closed": twist.closed_form_delta,
    "antipode-closed": twist.closed_form_antipode,
}


def cmd_expand(args) -> int:
    try:
        case = TwistCase(args.case, args.n0)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.op.endswith("-closed") and case.case_id == 3:
        raise UsageError("no closed form exists for case 3; use --op delta or --op antipode")
    try:
        g = parse_generator(args.gen)
    except ParseError as exc:
        raise UsageError(f"malformed generator: {exc}") from None
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    d = twist.build_twist(case, args.order)
    print(_OPS[args.op](g, d).render())
    return EXIT_OK


def cmd_normalize(args) -> int:
    try:
        x = parse_element(args.expr)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    print(x)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="svquant", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--suite", action="append",
                   help=f"suite name, comma list, or 'all' (repeatable); one of {', '.join(SUITES)}")
    v.add_argument("--n0", default="1,2,3", help="comma-separated nonzero integers")
    v.add_argument("--order", type=int, default=4, help="truncation order N (keep t^0..t^N)")
    v.add_argument("--range", type=int, default=3, help="max |n| for integer indices")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--output", help="also write the JSON report here")
    v.add_argument("--corrupt-brackets", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("expand", help="print a twisted coproduct or antipode")
    e.add_argument("--case", type=int, choices=(1, 2, 3), required=True)
    e.add_argument("--n0", type=int, default=1)
    e.add_argument("--order", type=int, default=5)
    e.add_argument("--op", choices=tuple(_OPS), default="delta")
    e.add_argument("--gen", required=True, help='generator such as "L(2)", "M(-1)", "Y(3/2)"')
    e.set_defaults(func=cmd_expand)

    n = sub.add_parser("normalize", help="straighten an expression into PBW form")
    n.add_argument("--expr", required=True)
    n.set_defaults(func=cmd_normalize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its message
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"svquant {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
