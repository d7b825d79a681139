"""Command-line front end: enumeration, verification suites, the count
table, and exploratory conjecture reports.

Exit codes: 0 all checks pass, 1 check failure, 2 usage error.
Output is deterministic: fixed sort orders, no timestamps in data rows.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import dyck, fishburn, hat, series, verify

DEFAULT_MAX_N = 12

REPORT_KEYS = ("check", "n", "d", "expected", "actual", "pass")


def max_n() -> int:
    return int(os.environ.get("FISHLAB_MAX_N", DEFAULT_MAX_N))


def serialize_seq(w) -> str:
    if len(w) <= 9:
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def _families(n, d):
    if n is None:
        raise ValueError
    if d is None:
        d = 0
    return {
        "dasc": lambda: hat.enumerate_d_asc(n, d),
        "modasc": lambda: hat.enumerate_mod_d_asc(n, d),
        "modinv": lambda: hat.enumerate_modinv(n),
        "wdesc": lambda: hat.enumerate_weak_descent(n),
        "fishburn": lambda: (
            p for p in fishburn.enumerate_perms(n) if fishburn.is_d_fishburn(p, d)
        ),
        "irsub": lambda: (
            p for p in fishburn.enumerate_perms(n)
            if fishburn.subdiagonal(p, "increasing-runs")
        ),
        "drsub": lambda: (
            p for p in fishburn.enumerate_perms(n)
            if fishburn.subdiagonal(p, "decreasing-runs")
        ),
    }


def cmd_enumerate(args, out) -> int:
    if args.n > max_n():
        print(f"n exceeds the configured maximum {max_n()}", file=sys.stderr)
        return 2
    if args.family in ("dasc", "modasc", "fishburn") and args.d is None:
        print(f"--d is required for family {args.family}", file=sys.stderr)
        return 2
    for w in _families(args.n, args.d)[args.family]():
        print(serialize_seq(w), file=out)
    return 0


def _json_default(value):
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    return list(value)


def _print_reports(reports, out):
    failed = False
    for r in reports:
        row = {k: r[k] for k in REPORT_KEYS}
        if r.get("exploratory"):
            row["exploratory"] = True
        print(json.dumps(row, default=_json_default), file=out)
        failed = failed or not r["pass"]
    return failed


def cmd_verify(args, out) -> int:
    if args.n_max > max_n():
        print(f"--n-max exceeds the configured maximum {max_n()}", file=sys.stderr)
        return 2
    reports = verify.run_suite(args.suite, args.n_max, args.d_max)
    return 1 if _print_reports(reports, out) else 0


def cmd_table(args, out) -> int:
    if args.n_max > (9 if args.cross_check else 12) or args.n_max > max_n():
        print("--n-max too large for this mode", file=sys.stderr)
        return 2
    rows = []
    for d in range(args.d_max + 1):
        coeffs = series.series_Q(d, -1, args.n_max).coeffs
        for n in range(args.n_max + 1):
            rows.append((d, n, int(coeffs[n])))
    if args.format == "csv":
        print("d,n,count", file=out)
        for d, n, count in rows:
            print(f"{d},{n},{count}", file=out)
    else:
        for d, n, count in rows:
            print(json.dumps({"d": d, "n": n, "count": count}), file=out)
    if args.cross_check:
        for d, n, count in rows:
            if d > 3:
                continue
            direct = sum(
                1 for p in dyck.enumerate_avoiders_213(n)
                if fishburn.is_d_fishburn(p, d)
            )
            if direct != count:
                print(
                    f"cross-check mismatch at d={d} n={n}: "
                    f"series {count}, enumeration {direct}",
                    file=sys.stderr,
                )
                return 1
    return 0


def cmd_explore(args, out) -> int:
    if args.n_max > min(8, max_n()):
        print("--n-max too large for conjecture exploration", file=sys.stderr)
        return 2
    _print_reports(verify.explore_conjectures(args.n_max), out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fishlab")
    parser.add_argument(
        "--threads", type=int, default=1,
        help="worker hint; output is identical for every value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the members of a family")
    p.add_argument("--family", required=True, choices=sorted(_families(0, 0)))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite", required=True, choices=sorted(verify.SUITES) + ["all"]
    )
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--d-max", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="counts of 213-avoiding d-Fishburn permutations")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--d-max", type=int, default=5)
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser(
        "explore-conjectures", help="exploratory image-equality reports"
    )
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_explore)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
