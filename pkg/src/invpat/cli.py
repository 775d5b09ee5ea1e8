"""Command-line front end.

Subcommands: count, sequence, dist, map, verify, conjecture, oeis,
dump-table.  Payloads are JSON by default (CSV via --format csv) with
counts serialized as decimal strings so consumers never lose precision;
the map subcommand prints the mapped object's plain text form.

Exit codes: 0 success, 1 verification failure or counterexample, 2 usage
or internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import bijections, counting, structures, verify
from .core import (format_pattern, format_sequence, parse_pattern,
                   parse_sequence)
from .enumerator import avoidance_sequence, count as brute_count, distribution

#: Patterns with a formula-backed counter; the rest are brute-force only.
FORMULAS: dict[str, Callable[[int], int]] = {
    "012": counting.count_012,
    "021": counting.count_021,
    "102": counting.count_102,
    "201": counting.count_201_210,
    "210": counting.count_201_210,
    "000": counting.count_000,
    "001": counting.count_001,
    "011": counting.bell,
    "101": counting.count_101_110,
    "110": counting.count_101_110,
}

BRUTE_CEILING = 11

BIJECTIONS: dict[str, tuple[Callable, Callable, str, str]] = {
    # name -> (fwd, inv, input kind fwd, input kind inv)
    "theta": (bijections.theta, bijections.theta_inv, "perm", "seq"),
    "rho": (bijections.rho, bijections.rho_inv, "seq", "path"),
    "phi": (bijections.phi, bijections.phi_inv, "path", "seq"),
    "kappa": (bijections.kappa, bijections.kappa_inv, "seq", "rgf"),
    "tau": (bijections.tau, bijections.tau_inv, "seq", "tree"),
    "mu": (bijections.mu_210_to_201, bijections.mu_inv, "seq", "seq"),
    "tree000": (bijections.tree000_to_inv, bijections.inv_to_tree000,
                "seq", "seq"),
}


class UsageError(Exception):
    pass


def _parse_by_kind(kind: str, text: str):
    if kind in ("seq", "perm", "rgf"):
        return parse_sequence(text)
    if kind == "path":
        return structures.as_schroder_path(text.strip())
    if kind == "tree":
        return structures.parse_tree(text)
    raise UsageError(f"unhandled input kind {kind}")


def _format_result(value) -> str:
    if isinstance(value, tuple):
        return format_sequence(value)
    if isinstance(value, str):
        return value
    if value is None or isinstance(value, structures.BWNode):
        return structures.serialize_tree(value)
    return str(value)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        keys = sorted(payload)
        print(",".join(keys))
        print(",".join(str(payload[k]) for k in keys))


def _check_ceiling(n: int, force: bool) -> None:
    if n > BRUTE_CEILING and not force:
        raise UsageError(
            f"n={n} exceeds the brute-force ceiling {BRUTE_CEILING}; "
            "pass --force to run anyway")


def _resolve_method(pattern: str, method: str) -> str:
    if method == "auto":
        return "formula" if pattern in FORMULAS else "brute"
    if method == "formula" and pattern not in FORMULAS:
        raise UsageError(f"no formula is known for pattern {pattern}; "
                         "use --method brute")
    return method


def _cmd_count(args) -> int:
    pattern = format_pattern(parse_pattern(args.pattern))
    method = _resolve_method(pattern, args.method)
    if method == "formula":
        value = FORMULAS[pattern](args.n)
    else:
        _check_ceiling(args.n, args.force)
        value = brute_count(args.n, [pattern])
    _emit({"pattern": pattern, "n": args.n, "count": str(value),
           "method": method}, args.format)
    return 0


def _cmd_sequence(args) -> int:
    pattern = format_pattern(parse_pattern(args.pattern))
    method = _resolve_method(pattern, args.method)
    if method == "formula":
        terms = [FORMULAS[pattern](n) for n in range(1, args.n_max + 1)]
    else:
        _check_ceiling(args.n_max, args.force)
        terms = avoidance_sequence([pattern], args.n_max)
    _emit({"pattern": pattern, "n_max": args.n_max, "method": method,
           "terms": [str(t) for t in terms]}, args.format)
    return 0


def _cmd_dist(args) -> int:
    pattern = format_pattern(parse_pattern(args.pattern))
    _check_ceiling(args.n, args.force)
    hist = distribution(args.n, [pattern], args.stat)
    if args.format == "json":
        print(hist.to_json())
    else:
        print("value,count")
        for v, c in sorted(hist.bins.items()):
            print(f"{v},{c}")
    return 0


def _cmd_map(args) -> int:
    if args.bijection not in BIJECTIONS:
        raise UsageError(f"unknown bijection {args.bijection}; "
                         f"known: {sorted(BIJECTIONS)}")
    fwd, inv, kind_fwd, kind_inv = BIJECTIONS[args.bijection]
    fn, kind = (fwd, kind_fwd) if args.dir == "fwd" else (inv, kind_inv)
    value = fn(_parse_by_kind(kind, args.input))
    print(_format_result(value))
    return 0


def _cmd_verify(args) -> int:
    reports = verify.run_suite(args.suite, args.n_max)
    ok = all(r.passed for r in reports)
    print(json.dumps({"reports": [r.to_dict() for r in reports],
                      "passed": ok}, sort_keys=True))
    return 0 if ok else 1


def _cmd_conjecture(args) -> int:
    report = verify.run_conjecture(args.id, args.n_max)
    print(report.to_json())
    return 0 if report.passed else 1


def _cmd_oeis(args) -> int:
    ids = [args.sequence] if args.sequence else sorted(verify.CROSSCHECKS)
    reports = []
    for seq_id in ids:
        reports.append(verify.run_crosscheck(
            seq_id, n_terms=args.n_terms, source=args.b_file,
            offline=not args.fetch, cache_dir=args.cache_dir))
    ok = all(r.passed for r in reports)
    print(json.dumps({"reports": [r.to_dict() for r in reports],
                      "passed": ok}, sort_keys=True))
    return 0 if ok else 1


def _cmd_dump_table(args) -> int:
    if args.table not in counting.TABLES:
        raise UsageError(f"unknown table {args.table}; "
                         f"known: {sorted(counting.TABLES)}")
    table = counting.TABLES[args.table](args.n_max)
    sys.stdout.write(table.to_csv())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invpat",
        description="Exact enumeration and verification for "
                    "pattern-avoiding inversion sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, n_flag=False, n_max_flag=False, method=False):
        if n_flag:
            p.add_argument("--n", type=int, required=True)
        if n_max_flag:
            p.add_argument("--n-max", dest="n_max", type=int, required=True)
        if method:
            p.add_argument("--method", choices=("brute", "formula", "auto"),
                           default="auto")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--force", action="store_true",
                       help="allow brute force beyond the ceiling "
                            f"(default {BRUTE_CEILING})")

    p = sub.add_parser("count", help="count avoiders of one pattern")
    p.add_argument("--pattern", required=True)
    add_common(p, n_flag=True, method=True)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("sequence", help="avoidance sequence up to n-max")
    p.add_argument("--pattern", required=True)
    add_common(p, n_max_flag=True, method=True)
    p.set_defaults(fn=_cmd_sequence)

    p = sub.add_parser("dist", help="statistic histogram over avoiders")
    p.add_argument("--pattern", required=True)
    p.add_argument("--stat", required=True)
    add_common(p, n_flag=True)
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("map", help="apply a bijection to one object")
    p.add_argument("--bijection", required=True)
    p.add_argument("--dir", choices=("fwd", "inv"), default="fwd")
    p.add_argument("--input", required=True)
    p.set_defaults(fn=_cmd_map)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--n-max", dest="n_max", type=int, default=8)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("conjecture", help="test a conjectured identity")
    p.add_argument("--id", required=True,
                   choices=("entringer", "schroder_ascents"))
    p.add_argument("--n-max", dest="n_max", type=int, default=8)
    p.set_defaults(fn=_cmd_conjecture)

    p = sub.add_parser("oeis", help="cross-check computed terms against "
                                    "OEIS b-files")
    p.add_argument("--sequence", help="A-number; default: all registered")
    p.add_argument("--n-terms", dest="n_terms", type=int)
    p.add_argument("--b-file", dest="b_file",
                   help="explicit local b-file path")
    p.add_argument("--fetch", action="store_true",
                   help="allow remote fetch (opt-in); default offline")
    p.add_argument("--cache-dir", dest="cache_dir",
                   help="b-file cache directory (or $INVPAT_CACHE)")
    p.set_defaults(fn=_cmd_oeis)

    p = sub.add_parser("dump-table", help="dump a count table as CSV")
    p.add_argument("--table", required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.set_defaults(fn=_cmd_dump_table)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
