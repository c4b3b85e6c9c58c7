"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 internal invariant
violation (including a benchmark row whose two solver paths disagree).
"""
import argparse
import sys

from . import bench as _bench
from .formats import (
    ParseError,
    format_check_report,
    format_system,
    parse_system,
    parse_vectors,
    write_cone,
)
from .mb_core import ADJACENCY_TESTS
from .solver import InternalInvariantError, conehull
from .verify import ORACLE_MAX_M, ORACLE_MAX_N, check_solutions, oracle_enumerate

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text, out_path=None):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_bench_spec(text):
    if text in ("desk", "table"):
        return _bench.DESK_ROWS if text == "desk" else _bench.TABLE_ROWS
    rows = []
    for chunk in text.replace(";", " ").split():
        parts = chunk.split(",")
        if len(parts) != 3 or not all(p.strip().isdigit() for p in parts):
            raise UsageError(f"bad bench row {chunk!r}; expected n,m,r")
        rows.append(tuple(int(p) for p in parts))
    return tuple(rows)


def cmd_solve(args):
    system = parse_system(_read(args.file))
    cone = conehull(system, as_is=args.as_is, adjacency=args.adjacency)
    _emit(write_cone(cone), args.out)


def cmd_check(args):
    system = parse_system(_read(args.system))
    candidates = parse_vectors(_read(args.candidates), system.dimension)
    _emit(format_check_report(check_solutions(system, candidates)))


def cmd_oracle(args):
    system = parse_system(_read(args.file))
    try:
        cone = oracle_enumerate(system, args.max_n, args.max_m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(write_cone(cone), args.out)


def cmd_gen(args):
    try:
        system = _bench.random_system(args.n, args.m, args.r, args.coeff_bound, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(format_system(system), args.out)


def cmd_bench(args):
    try:
        spec = _bench.BenchSpec(_parse_bench_spec(args.spec), args.coeff_bound, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    timeout = args.timeout if args.timeout > 0 else None
    report = _bench.bench(spec, timeout=timeout)
    _emit(_bench.format_table(report))
    if args.csv:
        _emit(_bench.format_csv(report), args.csv)
    if any(row.status == "mismatch" for row in report):
        raise InternalInvariantError("the two solver paths produced different cones")


def build_parser():
    parser = _Parser(prog="mbcone", description=(
        "Generators (lineality basis U and extreme rays V) of the cone "
        "{x : l_j(x) <= 0} for rational linear forms l_j."))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="compute U and V for a system file")
    p.add_argument("file")
    p.add_argument("--as-is", action="store_true", help="skip the change of variables")
    p.add_argument("--adjacency", choices=ADJACENCY_TESTS, default="combinatorial")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="split candidate vectors into solutions and non-solutions")
    p.add_argument("system")
    p.add_argument("candidates", help="vectors in system layout ('n k' + rows) or solve output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="brute-force generators of a small system")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, default=ORACLE_MAX_N)
    p.add_argument("--max-m", type=int, default=ORACLE_MAX_M)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    construction = (
        "Random systems: r integer rows uniform in [-c, c], redrawn until they "
        "have rank r, then m - r random integer combinations (coefficients in "
        "[-c, c]) of them, rows shuffled; all draws come from the seed.")

    p = sub.add_parser("gen", help="write a random system of given rank", description=construction)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, default=_bench.DEFAULT_COEFF_BOUND)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time both solver paths on random systems",
                       description=construction)
    p.add_argument("--spec", required=True,
                   help="'n,m,r n,m,r ...', or 'desk' (first six table rows) or 'table'")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, default=_bench.DEFAULT_COEFF_BOUND)
    p.add_argument("--timeout", type=float, default=_bench.DEFAULT_TIMEOUT,
                   help="seconds per row; 0 disables the limit")
    p.add_argument("--csv", help="also write the report as CSV to this path")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InternalInvariantError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
