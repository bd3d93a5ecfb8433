"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3
experimental-path guard, 4 tableau parse error, 5 domain error (tableau
outside the minimal orbit set).  These are stable so shell harnesses need
no output parsing.
"""

from __future__ import annotations

import argparse
import json
import sys

from .orbits import (
    ExperimentalConstructionError,
    NotMinimalOrbitError,
    invert,
    minimal_orbit_tableau,
)
from .shapes import Rectangle, diagonal_from_lambda_plus, parse_partition
from .tableaux import (
    TableauError,
    TableauFormatError,
    dumps,
    format_grid,
    inverse_promotion,
    loads,
    promotion,
)
from .verify import (
    EnumerationCapError,
    divisors,
    orbit_table,
    q_hook_at_root,
    run_suite,
)
from .words import format_permutation, parse_permutation

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_EXPERIMENTAL = 3
EXIT_PARSE = 4
EXIT_DOMAIN = 5


def _read_tableau(path: str):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return loads(text)


def _print_tableau(t, fmt: str) -> None:
    if fmt == "grid":
        print(format_grid(t))
    else:
        print(dumps(t))


def _cmd_construct(args) -> int:
    w = parse_permutation(args.w)
    n = args.n if args.n is not None else w.n
    if w.n != n:
        print(f"error: --w has {w.n} letters but --n is {n}", file=sys.stderr)
        return EXIT_USAGE
    rect = Rectangle(n, args.m)
    if args.m < n and not (args.via == "insertion" and args.experimental):
        print(
            "error: m < n is experimental; pass --via insertion --experimental",
            file=sys.stderr,
        )
        return EXIT_EXPERIMENTAL
    diag = None
    if args.diagonal is not None:
        lam_plus = parse_partition(args.diagonal)
        if lam_plus.nrows > rect.nrows or lam_plus.ncols > rect.ncols:
            print(f"error: diagonal shape {lam_plus} does not fit in {rect.nrows}x{rect.ncols}", file=sys.stderr)
            return EXIT_USAGE
        diag = diagonal_from_lambda_plus(lam_plus)
        if diag.n != n:
            print(f"error: shape {lam_plus} has {diag.n} corners, need {n}", file=sys.stderr)
            return EXIT_USAGE
    choice = None
    if args.choice_tableau is not None:
        try:
            choice = _read_tableau(args.choice_tableau)
        except (OSError, TableauFormatError, TableauError) as exc:
            print(f"error: bad choice tableau: {exc}", file=sys.stderr)
            return EXIT_PARSE
    try:
        t = minimal_orbit_tableau(w, rect, diag, via=args.via, experimental=args.experimental, choice=choice)
    except ExperimentalConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXPERIMENTAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _print_tableau(t, args.format)
    return EXIT_OK


def _cmd_promote(args) -> int:
    try:
        t = _read_tableau(args.tableau)
    except (OSError, TableauFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    step = promotion if args.steps >= 0 else inverse_promotion
    try:
        for _ in range(abs(args.steps)):
            t = step(t)
    except TableauError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _print_tableau(t, args.format)
    return EXIT_OK


def _cmd_invert(args) -> int:
    try:
        t = _read_tableau(args.tableau)
    except (OSError, TableauFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        w = invert(t)
    except NotMinimalOrbitError as exc:
        print(f"not in O_n: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(format_permutation(w))
    return EXIT_OK


def _cmd_verify(args) -> int:
    rect = Rectangle(args.n, args.m)
    try:
        report = run_suite(
            rect,
            args.suite,
            seed=args.seed,
            all_choices=args.all_choices,
            all_diagonals=args.all_diagonals,
            max_cells=args.max_cells,
            max_count=args.max_count,
        )
    except EnumerationCapError as exc:
        print(f"error: {exc} (see --max-cells/--max-count)", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.format_text())
    if args.json:
        print(json.dumps(report.to_json_dict()))
    return EXIT_OK if report.passed else EXIT_VERIFY


def _cmd_csp(args) -> int:
    rect = Rectangle(args.n, args.m)
    try:
        table = orbit_table(rect, max_cells=args.max_cells, max_count=args.max_count)
    except EnumerationCapError as exc:
        print(f"error: {exc} (see --max-cells/--max-count)", file=sys.stderr)
        return EXIT_USAGE
    ok = True
    for r in divisors(rect.ncells):
        fixed = table.counts[r]
        val = q_hook_at_root(rect, r)
        line = f"{r} {fixed} {val}"
        if fixed != val:
            line += " MISMATCH"
            ok = False
        print(line)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taquin",
        description="Minimal promotion orbits of rectangular standard Young tableaux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the tableau attached to a permutation")
    p.add_argument("--n", type=int, default=None, help="permutation size (defaults to the length of --w)")
    p.add_argument("--m", type=int, required=True, help="other side of the rectangle (columns)")
    p.add_argument("--w", required=True, help='permutation, e.g. "3142" or "3,1,4,2"')
    p.add_argument("--diagonal", default=None, help='diagonal as its outer shape, e.g. "5431"')
    p.add_argument("--choice-tableau", default=None, help="JSON tableau file fixing the slide order")
    p.add_argument("--via", choices=("slides", "insertion"), default="slides")
    p.add_argument("--experimental", action="store_true", help="allow the m < n route")
    p.add_argument("--format", choices=("json", "grid"), default="json")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("promote", help="apply promotion steps to a tableau file")
    p.add_argument("--tableau", default="-", help='JSON tableau file, or "-" for stdin')
    p.add_argument("--steps", type=int, default=1, help="negative values apply inverse promotion")
    p.add_argument("--format", choices=("json", "grid"), default="json")
    p.set_defaults(func=_cmd_promote)

    p = sub.add_parser("invert", help="read the permutation back off a tableau")
    p.add_argument("--tableau", default="-", help='JSON tableau file, or "-" for stdin')
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--suite", default="all", choices=("bijection", "independence", "csp", "haiman", "propositions", "all"))
    p.add_argument("--all-choices", action="store_true", help="sweep every choice tableau")
    p.add_argument("--all-diagonals", action="store_true", help="sweep every diagonal")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="also print a JSON report")
    p.add_argument("--max-cells", type=int, default=20)
    p.add_argument("--max-count", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("csp", help="print r, fixed-tableau count, polynomial value per divisor r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-cells", type=int, default=20)
    p.add_argument("--max-count", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_csp)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
