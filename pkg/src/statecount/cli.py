"""Command-line interface.

Subcommands: ``count`` (grand totals), ``table`` (recomputed tables as
CSV/JSON), ``verify`` (the discrepancy report), ``oracle`` (run one
enumeration oracle).  Exit codes: 0 success, 1 verification mismatch,
2 usage error.  All JSON counts are decimal strings, never floats.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import janggi, oracle, verify, xiangqi
from .combinatorics import pair_fill_count
from .fixtures import JG_SLIST, XQ_DLIST
from .geometry import zone, zone_names

TABLE_IDS = ("t1", "t2", "t3", "t4", "t5", "t6", "klist", "slist", "geometry")
TABLES_BY_VARIANT = {
    "xiangqi": ("t1", "t2", "t3", "t4", "t5", "klist", "slist", "geometry"),
    "janggi": ("t6", "klist", "slist", "geometry"),
}
ORACLE_TARGETS = (
    "enum_camp_xq",
    "enum_soldiers_xq",
    "enum_side_xq",
    "enum_home_jg",
    "enum_pair_fill",
    "enum_positions_small",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="statecount",
        description="Exact state-space counts for Xiangqi and Janggi, "
        "with oracle-backed verification against the published figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print a grand total")
    p_count.add_argument("--variant", required=True, choices=("xiangqi", "janggi"))
    p_count.add_argument("--format", default="dec", choices=("dec", "json"))

    p_table = sub.add_parser("table", help="emit a recomputed table")
    p_table.add_argument("--variant", required=True, choices=("xiangqi", "janggi"))
    p_table.add_argument("--table", required=True, choices=TABLE_IDS)
    p_table.add_argument("--format", default="csv", choices=("csv", "json"))

    p_verify = sub.add_parser("verify", help="recompute fixtures and report discrepancies")
    p_verify.add_argument(
        "--scope", default="all", choices=("all", "xiangqi", "janggi", "combinatorics")
    )

    p_oracle = sub.add_parser("oracle", help="run one enumeration oracle")
    p_oracle.add_argument("--target", required=True, choices=ORACLE_TARGETS)
    p_oracle.add_argument("params", nargs="*", help="oracle arguments")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "count":
        return _cmd_count(args)
    if args.command == "table":
        return _cmd_table(parser, args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "oracle":
        return _cmd_oracle(parser, args)
    parser.error(f"unknown command {args.command!r}")
    return 2


def _cmd_count(args: argparse.Namespace) -> int:
    if args.variant == "xiangqi":
        total = xiangqi.xq_grand_total()
        terms = list(xiangqi.grand_total_terms())
        index_name = "blanks"
    else:
        total = janggi.jg_grand_total()
        terms = list(janggi.grand_total_terms())
        index_name = "pieces"
    if args.format == "dec":
        print(total)
        return 0
    record = {
        "variant": args.variant,
        "total": str(total),
        "digits": len(str(total)),
        "terms": [
            {index_name: index, "heavy_pieces": y, "count": str(term)}
            for index, y, term in terms
        ],
    }
    print(json.dumps(record, indent=2))
    return 0


def _emit(headers: list[str], rows: list[list[str]], fmt: str) -> None:
    if fmt == "csv":
        print(",".join(headers))
        for row in rows:
            print(",".join(row))
    else:
        print(json.dumps(
            [dict(zip(headers, row)) for row in rows], indent=2
        ))


def _cmd_table(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.table not in TABLES_BY_VARIANT[args.variant]:
        parser.error(
            f"table {args.table!r} is not defined for {args.variant}; "
            f"valid: {', '.join(TABLES_BY_VARIANT[args.variant])}"
        )
    if args.table == "geometry":
        return _emit_geometry(args)
    headers, rows = _build_table(args.variant, args.table)
    _emit(headers, rows, args.format)
    return 0


def _build_table(variant: str, table_id: str) -> tuple[list[str], list[list[str]]]:
    if table_id == "t1":
        headers = ["used_pieces", "advisors", "elephants", "total",
                   "two_shared", "one_shared", "no_shared"]
        rows = []
        for a in (2, 1, 0):
            for e in (2, 1, 0):
                row = xiangqi.camp_classes(a, e)
                c = row.by_shared_elephants
                rows.append([str(v) for v in (a + e + 1, a, e, row.total, c[2], c[1], c[0])])
        return headers, rows
    if table_id == "t2":
        headers = ["used_pieces", "total", "two_shared", "one_shared", "no_shared"]
        rows = []
        for pieces in (5, 4, 3, 2, 1):
            row = xiangqi.camp_by_piece_count(pieces)
            c = row.by_shared_elephants
            rows.append([str(v) for v in (pieces, row.total, c[2], c[1], c[0])])
        return headers, rows
    if table_id == "t3":
        headers = ["soldiers", "blank_10", "blank_9", "blank_8"]
        rows = [
            [str(s)] + [str(xiangqi.soldier_own_side(blank, s)) for blank in (10, 9, 8)]
            for s in range(6)
        ]
        return headers, rows
    if table_id == "t4":
        headers = ["soldiers"] + [f"blanks_{n}" for n in range(35, 45)]
        rows = [
            [str(s)] + [str(xiangqi.side_exact(n, s)) for n in range(35, 45)]
            for s in range(6)
        ]
        return headers, rows
    if table_id == "t5":
        headers = ["reserve"] + [f"blanks_{n}" for n in range(35, 45)]
        rows = [
            [str(k)] + [str(xiangqi.side_reserve(n, k)) for n in range(35, 45)]
            for k in range(6)
        ]
        return headers, rows
    if table_id == "t6":
        headers = ["pieces"] + [f"reserve_{k}" for k in range(6)]
        rows = [
            [str(n)] + [str(janggi.jg_home_count(n, k)) for k in range(6)]
            for n in range(1, 9)
        ]
        return headers, rows
    if table_id == "klist":
        if variant == "xiangqi":
            headers = ["blanks", "count"]
            rows = [[str(x), str(xiangqi.xq_positions(x))] for x in range(70, 89)]
        else:
            headers = ["pieces", "count"]
            rows = [[str(n), str(janggi.jg_positions(n))] for n in range(2, 17)]
        return headers, rows
    if table_id == "slist":
        pairs, printed = (6, XQ_DLIST) if variant == "xiangqi" else (8, JG_SLIST)
        headers = ["sites", "computed", "printed", "status"]
        rows = []
        for k, paper_value in enumerate(printed):
            computed = pair_fill_count(pairs, k)
            status = "ok" if computed == paper_value else "typo-suspect"
            rows.append([str(k), str(computed), str(paper_value), status])
        return headers, rows
    raise ValueError(table_id)


def _emit_geometry(args: argparse.Namespace) -> int:
    if args.format == "json":
        record = {
            "variant": args.variant,
            "zones": {
                player: {
                    name: sorted([s.file, s.rank] for s in zone(args.variant, player, name))
                    for name in zone_names(args.variant)
                }
                for player in ("A", "B")
            },
        }
        print(json.dumps(record, indent=2))
    else:
        print("player,zone,file,rank")
        for player in ("A", "B"):
            for name in zone_names(args.variant):
                for site in sorted(zone(args.variant, player, name)):
                    print(f"{player},{name},{site.file},{site.rank}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    result = verify.run_verify(args.scope)
    print(verify.format_report(result))
    return result.exit_code


def _cmd_oracle(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    params: list = []
    for raw in args.params:
        try:
            params.append(int(raw))
        except ValueError:
            params.append(raw)
    started = time.perf_counter()
    try:
        if args.target == "enum_camp_xq":
            row = oracle.enum_camp_xq(*params)
            c = row.by_shared_elephants
            output = (f"total={row.total} two_shared={c[2]} "
                      f"one_shared={c[1]} no_shared={c[0]}")
        elif args.target == "enum_soldiers_xq":
            output = str(oracle.enum_soldiers_xq(*params))
        elif args.target == "enum_side_xq":
            output = str(oracle.enum_side_xq(*params))
        elif args.target == "enum_home_jg":
            output = str(oracle.enum_home_jg(*params))
        elif args.target == "enum_pair_fill":
            output = str(oracle.enum_pair_fill(*params))
        else:
            counts = oracle.enum_positions_small(*params)
            output = " ".join(f"{t}:{counts[t]}" for t in sorted(counts))
    except oracle.OracleBoundError as exc:
        parser.error(str(exc))
    except TypeError as exc:
        parser.error(f"bad oracle arguments: {exc}")
    elapsed = time.perf_counter() - started
    print(output)
    print(f"wall_time_s={elapsed:.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
