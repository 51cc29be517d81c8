"""Command-line interface: corpus verification runs, bound tables, and
one-off diagonal decompositions."""

from __future__ import annotations

import argparse
import sys

from . import perm
from .bounds import HTable, f_bound, g_bound, h_bound
from .catalog import CorpusError, default_corpus_path, load_corpus
from .goursat import goursat_decompose
from .harness import (
    CHECKS,
    CounterexampleError,
    emit_report,
    power_structure_of,
    report_config,
    run_checks,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kroncover",
        description="covering-subgroup verification over a corpus of small groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run theorem checks over a corpus")
    v.add_argument("--corpus", default=None, help="JSONL corpus path (default: shipped catalog)")
    v.add_argument(
        "--checks",
        default=",".join(CHECKS),
        help=f"comma-separated subset of: {','.join(CHECKS)}",
    )
    v.add_argument("--max-order", type=int, default=None)
    v.add_argument("--max-aut-order", type=int, default=None)
    v.add_argument("--out", default=None, help="output file (default: stdout)")
    v.add_argument("--format", choices=("tsv", "json"), default="tsv")
    v.add_argument("--h-constant", type=float, default=2.0)
    v.add_argument("--threads", type=int, default=None)

    b = sub.add_parser("bounds", help="emit a table of h, f or g values")
    b.add_argument("--table", choices=("h", "f", "g"), required=True)
    b.add_argument("--n-max", type=int, default=6)
    b.add_argument("--c-max", type=int, default=3)
    b.add_argument("--h-constant", type=float, default=2.0)
    b.add_argument("--format", choices=("tsv",), default="tsv")
    b.add_argument("--out", default=None)

    d = sub.add_parser("decompose", help="diagonal decomposition of a subgroup of T^k")
    d.add_argument("--group", required=True, help="corpus name of a power-of-simple group")
    d.add_argument(
        "--subgroup",
        required=True,
        help="generators in cycle notation, separated by ';'",
    )
    d.add_argument("--corpus", default=None)
    return parser


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    corpus_path = args.corpus or default_corpus_path()
    specs = load_corpus(corpus_path)
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        print(f"unknown checks: {', '.join(bad)}", file=sys.stderr)
        return 1
    table = HTable(constant=args.h_constant)
    try:
        records = run_checks(
            specs,
            checks,
            max_order=args.max_order,
            max_aut_order=args.max_aut_order,
            table=table,
            threads=args.threads,
        )
    except CounterexampleError as exc:
        print(f"COUNTEREXAMPLE EVENT: {exc}", file=sys.stderr)
        print(exc.serialized(), file=sys.stderr)
        return 2
    config = report_config(table, corpus_path)
    config["checks"] = list(checks)
    _write(emit_report(records, args.format, config), args.out)
    failed = [r for r in records if not r.passed]
    return 2 if failed else 0


def cmd_bounds(args) -> int:
    table = HTable(constant=args.h_constant)
    lines = [f"# h_constant={table.constant} log_base=2"]
    if args.table == "h":
        lines.append("m\tkind\tvalue")
        for m in range(1, args.n_max + 1):
            b = h_bound(m, table)
            lines.append(f"{m}\t{b.kind}\t{b.describe()}")
    elif args.table == "f":
        lines.append("n\tkind\tvalue")
        for n in range(1, args.n_max + 1):
            b = f_bound(n, table)
            lines.append(f"{n}\t{b.kind}\t{b.describe()}")
    else:
        lines.append("n\tc\tkind\tvalue")
        for n in range(1, args.n_max + 1):
            for c in range(0, args.c_max + 1):
                b = g_bound(n, c, table)
                lines.append(f"{n}\t{c}\t{b.kind}\t{b.describe()}")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_decompose(args) -> int:
    corpus_path = args.corpus or default_corpus_path()
    specs = {s.name: s for s in load_corpus(corpus_path)}
    if args.group not in specs:
        print(f"group {args.group!r} not in corpus", file=sys.stderr)
        return 1
    G = specs[args.group].build()
    P = power_structure_of(G)
    if P is None or P.k < 1:
        print(f"{args.group} is not a recognizable power of a simple group", file=sys.stderr)
        return 1
    gens = [
        perm.parse_cycles(s.strip(), G.degree)
        for s in args.subgroup.split(";")
        if s.strip()
    ]
    U = G.subgroup(gens)
    for i in range(P.k):
        from .goursat import projection_full

        if not projection_full(U, P, i):
            print(f"projection onto factor {i} is not full; no diagonal decomposition")
            return 0
    dec = goursat_decompose(U, P)
    if dec is None:
        print("subgroup has full projections but is not a product of full diagonals")
        return 0
    print(f"|U| = {U.order}, partition of {P.k} coordinates:")
    for part, tup in zip(dec.partition, dec.maps):
        maps = "; ".join(
            "id" if phi.is_identity() else repr(phi) for phi in tup
        )
        print(f"  {list(part)}: {maps}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "bounds":
            return cmd_bounds(args)
        if args.command == "decompose":
            return cmd_decompose(args)
    except CorpusError as exc:
        print(f"corpus error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
