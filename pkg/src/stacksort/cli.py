"""Command-line entry point: ``stacksort <verb> ...``.

Exit codes: 0 success, 1 a verification counterexample, 2 usage or parse
error, 3 a resource guard was hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import dp, hooks, oracle
from .perm import InvalidPermutation, format_perm, is_primed, iterates, parse_perm
from .tableau import _split_columns, build_tableau

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
THREADS_ENV = "STACKSORT_THREADS"


class UsageError(Exception):
    pass


def annotate(q: Sequence[int]) -> str:
    """Iterate with its blocks in parentheses; empty blocks are not shown."""
    columns, blocks = _split_columns(tuple(q))
    parts = []
    for b, c in zip(blocks, columns):
        if b:
            parts.append("(" + format_perm(b) + ")")
        parts.append(str(c))
    rest = q[q.index(0):]
    return " ".join(parts + [format_perm(rest)])


def _perm_arg(args) -> tuple[int, ...]:
    text = " ".join(args.perm)
    try:
        return parse_perm(text)
    except InvalidPermutation as exc:
        raise UsageError(str(exc)) from exc


def cmd_trace(args) -> int:
    p = _perm_arg(args)
    its = iterates(p)
    primed = is_primed(p)
    if args.format == "json":
        payload: dict = {"iterates": [list(q) for q in its]}
        if primed:
            split = [_split_columns(q) for q in its[:-1]]
            payload["columns"] = [list(c) for c, _ in split]
            payload["blocks"] = [[list(b) for b in bs] for _, bs in split]
        print(json.dumps(payload))
        return EXIT_OK
    for k, q in enumerate(its):
        print(annotate(q) if primed and k < len(its) - 1 else format_perm(q))
    return EXIT_OK


def cmd_tableau(args) -> int:
    p = _perm_arg(args)
    if not is_primed(p):
        raise UsageError(f"{format_perm(p)} is not a permutation of 0..n ending in 0")
    T = build_tableau(p)
    if args.format == "json":
        print(T.to_json())
    else:
        print("shape " + ",".join(str(a) for a in T.shape))
        if T.shape:
            print(T.render())
    return EXIT_OK


def _emit_counts(t: int, rows: list[tuple[int, int]], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"t": t, "rows": [{"n": n, "count": str(c)} for n, c in rows]}))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "count"])
        w.writerows((n, str(c)) for n, c in rows)
        sys.stdout.write(buf.getvalue())
    elif len(rows) == 1:
        print(rows[0][1])
    else:
        for n, c in rows:
            print(f"{n} {c}")


def _require(args, *names: str) -> None:
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")
        if value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be non-negative")


def cmd_count(args) -> int:
    _require(args, "n", "t")
    if args.all:
        rows = dp.count_table(args.n, args.t, args.guard_states)
    else:
        rows = [(args.n, dp.count_sortable(args.n, args.t, args.guard_states))]
    _emit_counts(args.t, rows, args.format)
    return EXIT_OK


def cmd_table(args) -> int:
    _require(args, "max_n", "t")
    _emit_counts(args.t, dp.count_table(args.max_n, args.t, args.guard_states), args.format)
    return EXIT_OK


def cmd_oracle(args) -> int:
    _require(args, "n", "t")
    brute = oracle.brute_count(args.n, args.t, guard=args.guard_oracle, workers=args.threads)
    row = {"n": args.n, "t": args.t, "brute": str(brute)}
    status = EXIT_OK
    if args.compare_dp:
        counted = dp.count_sortable(args.n, args.t, args.guard_states)
        row["dp"] = str(counted)
        row["match"] = counted == brute
        if counted != brute:
            status = EXIT_FAIL
    if args.format == "json":
        print(json.dumps(row))
    else:
        print(f"brute {brute}")
        if args.compare_dp:
            print(f"dp {row['dp']}")
            print("MATCH" if row["match"] else "MISMATCH")
    return status


def cmd_verify(args) -> int:
    _require(args, "n")
    suites = args.suite or list(oracle.SUITES) + ["classic"]
    lemma_suites = [s for s in suites if s != "classic"]
    results = oracle.verify_lemmas(args.n, guard=args.guard_oracle, suites=lemma_suites)
    if "classic" in suites:
        w1, cat, w2, zeil = oracle.classic_counts(args.n, guard=args.guard_oracle, workers=args.threads)
        res = oracle.PropertyResult("classic_counts", args.n, checked=2)
        if w1 != cat:
            res.failures.append(f"1-sortable count {w1} but Catalan = {cat}")
        if w2 != zeil:
            res.failures.append(f"2-sortable count {w2} but closed form = {zeil}")
        results.append(res)
    if args.format == "json":
        print(oracle.report_json(results))
    else:
        for r in results:
            tag = "PASS" if r.ok else "FAIL"
            print(f"{tag} {r.property} n={r.n} checked={r.checked} failures={len(r.failures)}")
            for f in r.failures[:5]:
                print(f"    {f}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_motzkin(args) -> int:
    _require(args, "max_n")
    counts = [c for _, c in dp.count_table(args.max_n, 2, args.guard_states)]
    rows = oracle.motzkin_report(args.max_n, counts)
    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        print("n,count,motzkin,match")
        for r in rows:
            print(f"{r['n']},{r['count']},{r['motzkin']},{str(r['match']).lower()}")
    else:
        for r in rows:
            print(f"{r['n']} {r['count']} {r['motzkin']} {'ok' if r['match'] else 'DIFFERS'}")
    bad = [r["n"] for r in rows if not r["match"]]
    if bad:
        print(f"WARN conjecture fails at n = {bad}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker processes for brute force (env {THREADS_ENV})")
    common.add_argument("--guard-oracle", type=int, default=oracle.DEFAULT_ORACLE_GUARD,
                        help="largest n the brute-force oracle accepts")
    common.add_argument("--guard-states", type=int, default=None,
                        help="largest DP layer size before giving up")

    parser = argparse.ArgumentParser(prog="stacksort",
                                     description="Stack-sorting tableaux and sortable-permutation counts.")
    sub = parser.add_subparsers(dest="verb", required=True)

    for name, helptext in (("trace", "show every pass of the map"),
                           ("tableau", "build the stack-sorting tableau")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("perm", nargs="+", help='entries, e.g. "9 3 10 7 8 2 6 1 4 5 0"')

    sp = sub.add_parser("count", parents=[common], help="count t-sortable permutations of size n")
    sp.add_argument("--n", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--all", action="store_true", help="also print every smaller n")

    sp = sub.add_parser("table", parents=[common], help="counts for n = 1..max-n")
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--t", type=int)

    sp = sub.add_parser("oracle", parents=[common], help="brute-force count")
    sp.add_argument("--n", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--compare-dp", action="store_true")

    sp = sub.add_parser("verify", parents=[common], help="exhaustive structural checks")
    sp.add_argument("--n", type=int)
    sp.add_argument("--suite", action="append", choices=list(oracle.SUITES) + ["classic"])

    sp = sub.add_parser("motzkin", parents=[common], help="compare t=2 counts with Motzkin numbers")
    sp.add_argument("--max-n", type=int)
    return parser


COMMANDS = {
    "trace": cmd_trace,
    "tableau": cmd_tableau,
    "count": cmd_count,
    "table": cmd_table,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "motzkin": cmd_motzkin,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads is None:
        args.threads = int(os.environ.get(THREADS_ENV, "1") or 1)
    try:
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (oracle.OracleGuardExceeded, dp.StateGuardExceeded,
            hooks.ExtensionGuardExceeded) as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
