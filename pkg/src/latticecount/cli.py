"""latticecount command line.

    latticecount formula L43 --n 7
    latticecount table L2 --n 4..12 --k 1..3 --format json
    latticecount verify --n-max 9 --classes L2,L43
    latticecount catalog B22 --dot
    latticecount enumerate --n 6
    latticecount reduce lattice.txt
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from . import __version__
from .construct import BLOCK_IDS, block_info, catalog
from .enumeration import (MAX_ADJUNCT_K, OracleBudgetError, classify, enumerate_adjunct_lattices,
                          enumerate_all_lattices)
from .formats import format_poset, parse_poset, to_dot
from .formulas import FORMULAS, evaluate
from .poset import PosetError
from .reduce import basic_block, identify_block
from .verify import CHECKS, DEFAULT_CLASSES, GROUPS, verify


class UsageError(Exception):
    pass


def int_range(text: str) -> range:
    """``a..b`` (inclusive) or a single integer; ``a > b`` is an empty range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer range: {text!r}") from None


def _header(p) -> str:
    c = classify(p)
    h = "-" if c.h is None else c.h
    return f"n={c.n} r={c.r} k={c.k} h={h}"


# -- subcommands ------------------------------------------------------------

def cmd_formula(args, out):
    if args.id not in FORMULAS:
        raise UsageError(f"unknown formula id {args.id!r}")
    _, names = FORMULAS[args.id]
    given = {"n": args.n, "k": args.k}
    params = []
    for name in names:
        # the first parameter is a size under whatever letter the formula uses
        v = given["k"] if name == "k" else given["n"]
        if v is None:
            raise UsageError(f"{args.id} needs --{'k' if name == 'k' else 'n'}")
        params.append(v)
    print(evaluate(args.id, *params), file=out)
    return 0


def cmd_table(args, out):
    if args.id not in FORMULAS:
        raise UsageError(f"unknown formula id {args.id!r}")
    _, names = FORMULAS[args.id]
    has_k = "k" in names
    rows = []
    for n in args.n:
        for k in (args.k if has_k else [None]):
            value = evaluate(args.id, n, k) if has_k else evaluate(args.id, n)
            rows.append({"formula_id": args.id, "n": n, "k": k, "value": value})
    if args.format == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("formula_id", "n", "k", "value"))
        for r in rows:
            w.writerow((r["formula_id"], r["n"], "" if r["k"] is None else r["k"], r["value"]))
    return 0


def cmd_verify(args, out):
    classes = DEFAULT_CLASSES
    if args.classes is not None:
        classes = [c for c in args.classes.split(",") if c]
    unknown = [c for c in classes if c not in CHECKS and c not in GROUPS]
    if unknown:
        raise UsageError(f"unknown class {unknown[0]!r}")
    try:
        report = verify(args.n_max, classes, args.workers)
    except OracleBudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    out.write(report.to_json() if args.format == "json" else report.to_csv())
    if not report.passed:
        print(f"{len(report.mismatches())} of {len(report.rows)} rows differ", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_catalog(args, out):
    tags = BLOCK_IDS if args.id == "all" else (args.id,)
    for tag in tags:
        try:
            block_info(tag)
        except KeyError:
            raise UsageError(f"unknown basic block {tag!r}") from None
    parts = []
    for tag in tags:
        p = catalog(tag)
        head = f"{tag} {_header(p)}"
        parts.append(to_dot(p, tag, head) if args.dot else format_poset(p, head))
    out.write("\n".join(parts))
    return 0


def cmd_enumerate(args, out):
    try:
        if args.k_max is None:
            lats = enumerate_all_lattices(args.n, args.workers)
        else:
            if not 0 <= args.k_max <= MAX_ADJUNCT_K:
                raise UsageError(f"--k-max must be in 0..{MAX_ADJUNCT_K}")
            lats = enumerate_adjunct_lattices(args.n, args.k_max, args.workers)
    except OracleBudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    if args.dot:
        out.write("\n".join(to_dot(p, f"L{i}", _header(p)) for i, p in enumerate(lats.values())))
        return 0
    w = csv.writer(out, lineterminator="\n")
    w.writerow(("canonical", "n", "r", "k", "rc", "h"))
    for key, p in lats.items():
        c = classify(p)
        w.writerow((key.hex(), c.n, c.r, c.k, str(c.rc).lower(), "" if c.h is None else c.h))
    return 0


def cmd_reduce(args, out):
    text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    try:
        p = parse_poset(text)
    except PosetError as exc:
        raise UsageError(str(exc)) from None
    if not p.is_lattice:
        raise UsageError("input is not a lattice")
    b = basic_block(p)
    tag = identify_block(b, reduce_first=False) or "none"
    head = f"basic block {tag} {_header(b)}"
    out.write(to_dot(b, tag, head) if args.dot else format_poset(b, head))
    return 0


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="latticecount",
                                 description="Exact counts of finite lattices and their oracles.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true", help="log oracle progress")
    sub = ap.add_subparsers(dest="command", required=True)

    f = sub.add_parser("formula", help="evaluate one formula")
    f.add_argument("id")
    f.add_argument("--n", "--j", "--m", dest="n", type=int)
    f.add_argument("--k", type=int)
    f.set_defaults(func=cmd_formula)

    t = sub.add_parser("table", help="grid of formula values")
    t.add_argument("id")
    t.add_argument("--n", "--j", "--m", dest="n", type=int_range, required=True, help="a..b")
    t.add_argument("--k", type=int_range, default=range(1, 2), help="a..b")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="compare formulas with the oracles")
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--classes", help="comma separated ids or groups "
                   f"({', '.join(GROUPS)}); default: {','.join(DEFAULT_CLASSES)}")
    v.add_argument("--format", choices=("csv", "json"), default="csv")
    v.add_argument("--workers", type=int)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalog", help="emit a basic block")
    c.add_argument("id", help="F1..F7, B1..B22 or all")
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_catalog)

    e = sub.add_parser("enumerate", help="list lattices up to isomorphism")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k-max", type=int, help="use the adjunct oracle up to this nullity")
    e.add_argument("--dot", action="store_true")
    e.add_argument("--workers", type=int)
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("reduce", help="basic block of a lattice in poset text format")
    r.add_argument("file", help="path or - for stdin")
    r.add_argument("--dot", action="store_true")
    r.set_defaults(func=cmd_reduce)
    return ap


def main(argv=None, out=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(message)s")
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except UsageError as exc:
        ap.print_usage(sys.stderr)
        print(f"latticecount: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
