"""Command-line surface: generate, analyze, verify, sweep, check-config.

Conventions:
  - stdout carries data, stderr carries progress; --quiet silences progress.
  - exit 0: success / expected outcome; exit 1: a bound violation or an
    unexpected search outcome; exit 2: bad input or parameters; exit 3:
    the configuration search ran out of budget.
  - every command is a deterministic function of its flags (--jobs only
    changes scheduling, never output).
  - all numbers in reports are exact: integers, or rationals as "p/q".
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from .core import Family, family_from_json, family_to_json, max_degree
from .generators import (
    chvatal_hanson_graph,
    graph_lift,
    random_linear_family,
    steiner_triple_system,
    sunflower_family,
)
from .structure import structure_summary
from .verdict import (
    CSV_HEADER,
    DEFAULT_TRIPLE_SEVEN_BUDGET,
    evaluate_family,
    family_hash,
    search_remark_777,
    search_unique_8_config,
    sweep,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
            if not text.endswith("\n"):
                handle.write("\n")
    else:
        print(text)


def _progress(quiet: bool):
    if quiet:
        return None

    def report(count: int) -> None:
        if count % 500 == 0:
            print(f"  ... {count} families", file=sys.stderr)

    return report


def _load_family(path: str, lenient: bool) -> Family:
    with open(path) as handle:
        return family_from_json(handle.read(), lenient=lenient)


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "sunflower":
        fam = sunflower_family(args.delta, args.nu)
    elif args.kind == "steiner":
        fam = steiner_triple_system(args.n)
    elif args.kind == "graph-lift":
        fam = graph_lift(chvatal_hanson_graph(args.delta, args.nu))
    else:  # random
        fam = random_linear_family(args.n, args.edges, args.seed)
    _emit(family_to_json(fam), args.out)
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    fam = _load_family(args.path, args.lenient)
    summary = structure_summary(fam)
    if args.json:
        _emit(json.dumps(summary, indent=2, sort_keys=True), args.out)
        return EXIT_OK
    lines = [
        f"n            : {summary['n']}",
        f"edges        : {summary['size']}",
        f"max degree   : {summary['max_degree']}",
        f"nu           : {summary['nu']}",
        f"matching     : {summary['maximum_matching']}",
        f"forced (S_F) : {summary['s_f']}",
        f"k1           : {summary['k1']}",
        f"peel order   : {summary['nested_sequence']}",
    ]
    if summary["d_partition"] is not None:
        sizes = [len(summary["d_partition"][key]) for key in ("d0", "d1", "d2", "d3")]
        lines.append(f"|D0..D3|     : {sizes}")
    if summary["m_partition"] is not None:
        lines.append(
            f"|M1|, |M2|   : {len(summary['m_partition']['m1'])}, {len(summary['m_partition']['m2'])}"
        )
        lines.append(f"apex         : {summary['m_partition']['apex']}")
    if summary["e_partition"] is not None:
        sizes = [len(summary["e_partition"][key]) for key in ("e1", "e2", "e3", "e4")]
        lines.append(f"|E1..E4|     : {sizes}")
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    fam = _load_family(args.path, args.lenient)
    report = evaluate_family(fam)
    payload = report.to_dict()
    _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_HEADER)
            writer.writerows(report.csv_rows())
    if not args.quiet:
        counts: dict[str, int] = {}
        for record in report.records:
            counts[record.verdict] = counts.get(record.verdict, 0) + 1
        print(f"verify {family_hash(fam)}: {counts}", file=sys.stderr)
    return EXIT_VIOLATION if payload["violations"] else EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    csv_writer = None
    csv_handle = None
    if args.csv:
        csv_handle = open(args.csv, "w", newline="")
        csv_writer = csv.writer(csv_handle)
        csv_writer.writerow(CSV_HEADER)

    report = sweep(
        args.max_vertices,
        args.max_edges,
        up_to_iso=not args.labeled,
        jobs=args.jobs,
        progress=_progress(args.quiet),
    )
    if csv_writer is not None:
        # deterministic matrix: re-evaluate in enumeration order
        from .generators import enumerate_families

        for fam in enumerate_families(
            args.max_vertices, args.max_edges, up_to_iso=not args.labeled
        ):
            csv_writer.writerows(evaluate_family(fam).csv_rows())
        csv_handle.close()
    _emit(json.dumps(report.to_dict(), indent=2, sort_keys=True), args.out)
    if not args.quiet:
        print(
            f"sweep: {report.families} families, "
            f"{len(report.violations)} violations, "
            f"{len(report.oracle_mismatches)} oracle mismatches",
            file=sys.stderr,
        )
    return EXIT_OK if report.clean else EXIT_VIOLATION


def _cmd_check_config(args: argparse.Namespace) -> int:
    if args.prop == "d2ab-unique":
        result = search_unique_8_config()
        _emit(json.dumps(result.to_dict(), indent=2, sort_keys=True), args.out)
        return EXIT_OK if len(result.classes) == 1 else EXIT_VIOLATION
    result = search_remark_777(budget=args.budget)
    _emit(json.dumps(result.to_dict(), indent=2, sort_keys=True), args.out)
    if result.status == "budget-exceeded":
        if not args.quiet:
            print(
                f"budget exhausted after {result.nodes_explored} nodes "
                f"({result.patterns_examined} patterns examined)",
                file=sys.stderr,
            )
        return EXIT_BUDGET
    return EXIT_OK if result.survivors == 0 else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linhyp",
        description="exact matchings, decompositions and size bounds for 3-uniform linear hypergraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a generated family as JSON")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    p = gen_sub.add_parser("sunflower", help="disjoint one-core sunflowers")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p = gen_sub.add_parser("steiner", help="Steiner triple system S(n,3,2)")
    p.add_argument("--n", type=int, required=True)
    p = gen_sub.add_parser("graph-lift", help="lift of the extremal graph for (delta, nu)")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p = gen_sub.add_parser("random", help="seeded random linear family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    for p in gen_sub.choices.values():
        p.add_argument("--out", default=None)

    analyze = sub.add_parser("analyze", help="print solver and decomposition facts")
    analyze.add_argument("path")
    analyze.add_argument("--json", action="store_true")
    analyze.add_argument("--lenient", action="store_true")
    analyze.add_argument("--out", default=None)

    verify = sub.add_parser("verify", help="evaluate every size bound on a family")
    verify.add_argument("path")
    verify.add_argument("--lenient", action="store_true")
    verify.add_argument("--out", default=None)
    verify.add_argument("--csv", default=None)
    verify.add_argument("--quiet", action="store_true")

    sweep_p = sub.add_parser("sweep", help="verify all bounds over an exhaustive enumeration")
    sweep_p.add_argument("--max-vertices", type=int, required=True)
    sweep_p.add_argument("--max-edges", type=int, required=True)
    sweep_p.add_argument("--labeled", action="store_true", help="no isomorphism reduction")
    sweep_p.add_argument("--jobs", type=int, default=1)
    sweep_p.add_argument("--out", default=None)
    sweep_p.add_argument("--csv", default=None)
    sweep_p.add_argument("--quiet", action="store_true")

    cfg = sub.add_parser("check-config", help="finite configuration searches")
    cfg.add_argument("--prop", choices=("d2ab-unique", "remark777"), required=True)
    cfg.add_argument("--budget", type=int, default=DEFAULT_TRIPLE_SEVEN_BUDGET)
    cfg.add_argument("--out", default=None)
    cfg.add_argument("--quiet", action="store_true")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "analyze": _cmd_analyze,
        "verify": _cmd_verify,
        "sweep": _cmd_sweep,
        "check-config": _cmd_check_config,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
