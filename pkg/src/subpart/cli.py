"""Command line interface.

Commands: count, chains, pn, bound, maximize, table, shape, verify.  Every
command takes --format {text,json,csv}, --out, --jobs, --cap, and --seed.
Exit codes: 0 success, 1 verification failure, 2 parse or validation
error, 3 resource cap exceeded, 4 output I/O failure.
"""

from __future__ import annotations

import argparse
import sys

from . import render
from .counting import (
    count_kchains,
    count_subpartitions,
    envelope_count_bound,
    partition_count,
)
from .maximizer import convergence_table, find_maximizers, shape_report
from .partitions import (
    DEFAULT_ENUMERATION_CAP,
    PartitionFormatError,
    ResourceLimitError,
    format_partition,
    parse_partition,
    profile,
)
from .svgplot import format_caption, write_shape_svg
from .verify import DEFAULT_SEED, run_verification


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except PartitionFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["text", "json", "csv"], default="text",
        help="output format (default text)",
    )
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument(
        "--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
        help="enumeration cap on p(n)",
    )
    common.add_argument(
        "--seed", type=int, default=DEFAULT_SEED,
        help="seed for randomized verification checks",
    )

    parser = argparse.ArgumentParser(
        prog="subpart",
        description="count subpartitions and nested chains, bound them, "
        "and study the partitions maximizing them",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", parents=[common], help="count subpartitions or k-chains")
    p_count.add_argument("partition", help='comma-separated parts, e.g. "4,2,1"; "" is empty')
    p_count.add_argument("--k", type=int, default=1, help="chain length (default 1)")
    p_count.add_argument("--strict", action="store_true", help="forbid equal consecutive chain elements")
    p_count.set_defaults(handler=cmd_count)

    p_chains = sub.add_parser("chains", parents=[common], help="count k-chains (count with --k required)")
    p_chains.add_argument("partition")
    p_chains.add_argument("--k", type=int, required=True)
    p_chains.add_argument("--strict", action="store_true")
    p_chains.set_defaults(handler=cmd_count)

    p_pn = sub.add_parser("pn", parents=[common], help="partition numbers p(n)")
    p_pn.add_argument("n", type=int)
    p_pn.set_defaults(handler=cmd_pn)

    p_bound = sub.add_parser("bound", parents=[common], help="envelope bound on the subpartition count")
    p_bound.add_argument("partition")
    p_bound.set_defaults(handler=cmd_bound)

    p_max = sub.add_parser("maximize", parents=[common], help="find all count-maximizing partitions of n")
    p_max.add_argument("--n", type=int, required=True)
    p_max.add_argument("--k", type=int, default=1)
    p_max.set_defaults(handler=cmd_maximize)

    p_table = sub.add_parser("table", parents=[common], help="maximizer reports over a range of n")
    p_table.add_argument("--n", required=True, help='range such as "1-12" or "4,9,16"')
    p_table.add_argument("--k", type=int, default=1)
    p_table.set_defaults(handler=cmd_table)

    p_shape = sub.add_parser("shape", parents=[common], help="SVG of the maximizer shape against the limit curve")
    p_shape.add_argument("--n", type=int, required=True)
    p_shape.add_argument("--k", type=int, default=1)
    p_shape.set_defaults(handler=cmd_shape)

    p_verify = sub.add_parser("verify", parents=[common], help="run the self-verification suites")
    p_verify.add_argument("--level", choices=["fast", "full"], default="fast")
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_lines(rows: list[list[str]]) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def cmd_count(args) -> int:
    lam = parse_partition(args.partition)
    if args.k == 1 and not args.strict:
        result = count_subpartitions(lam)
    else:
        result = count_kchains(lam, args.k, strict=args.strict)
    if args.format == "json":
        _emit(render.to_json(render.count_payload(result)), args)
    elif args.format == "csv":
        _emit(
            _csv_lines(
                [
                    ["partition", "k", "strict", "value", "method"],
                    [
                        format_partition(lam),
                        str(args.k),
                        str(args.strict).lower(),
                        str(result.value),
                        result.method,
                    ],
                ]
            ),
            args,
        )
    else:
        _emit(f"{result.value}\n", args)
    return 0


def cmd_pn(args) -> int:
    result = partition_count(args.n)
    if args.format == "json":
        _emit(render.to_json(render.count_payload(result)), args)
    elif args.format == "csv":
        _emit(_csv_lines([["n", "value"], [str(args.n), str(result.value)]]), args)
    else:
        _emit(f"{result.value}\n", args)
    return 0


def cmd_bound(args) -> int:
    lam = parse_partition(args.partition)
    bound = envelope_count_bound(profile(lam))
    if args.format == "json":
        _emit(render.to_json(render.bound_payload(format_partition(lam), bound)), args)
    elif args.format == "csv":
        _emit(
            _csv_lines(
                [
                    ["partition", "log_bound", "bound"],
                    [format_partition(lam), repr(bound.log_value), repr(bound.value)],
                ]
            ),
            args,
        )
    else:
        _emit(f"log_bound {bound.log_value!r}\nbound {bound.value!r}\n", args)
    return 0


def cmd_maximize(args) -> int:
    report = find_maximizers(args.n, args.k, jobs=args.jobs, cap=args.cap)
    if args.format == "json":
        _emit(render.to_json(render.report_payload(report)), args)
    elif args.format == "csv":
        _emit(render.reports_csv([report]), args)
    else:
        _emit(render.report_text(report), args)
    return 0


def _parse_n_values(spec: str) -> list[int]:
    values: list[int] = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if "-" in chunk[1:]:
            a, _, b = chunk.partition("-")
            lo, hi = int(a), int(b)
            if hi < lo:
                raise PartitionFormatError(f"empty range {chunk!r}")
            values.extend(range(lo, hi + 1))
        elif chunk:
            values.append(int(chunk))
    if not values:
        raise PartitionFormatError(f"no n values in {spec!r}")
    return values


def cmd_table(args) -> int:
    try:
        n_values = _parse_n_values(args.n)
    except ValueError as exc:
        raise PartitionFormatError(str(exc)) from exc
    reports = convergence_table(n_values, args.k, jobs=args.jobs, cap=args.cap)
    if args.format == "json":
        _emit(render.to_json([render.report_payload(r) for r in reports]), args)
    elif args.format == "csv":
        _emit(render.reports_csv(reports), args)
    else:
        rows = [render.MAXIMIZE_COLUMNS] + [render.report_row(r) for r in reports]
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        lines = [
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            for row in rows
        ]
        _emit("\n".join(lines) + "\n", args)
    return 0


def cmd_shape(args) -> int:
    report = shape_report(args.n, args.k, jobs=args.jobs, cap=args.cap)
    svg_path = args.out or f"shape-n{args.n}-k{args.k}.svg"
    write_shape_svg(report, svg_path)
    if args.format == "json":
        sys.stdout.write(render.to_json(render.shape_payload(report, svg_path)))
    else:
        sys.stdout.write(f"{svg_path}\n{format_caption(report)}\n")
    return 0


def cmd_verify(args) -> int:
    results = run_verification(level=args.level, seed=args.seed, jobs=args.jobs)
    if args.format == "json":
        payload = [
            {
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
                "seconds": round(r.seconds, 3),
            }
            for r in results
        ]
        _emit(render.to_json(payload), args)
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail} ({r.seconds:.2f}s)"
            for r in results
        ]
        failed = sum(1 for r in results if not r.passed)
        lines.append(
            f"{len(results) - failed}/{len(results)} checks passed at level {args.level}"
        )
        _emit("\n".join(lines) + "\n", args)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
