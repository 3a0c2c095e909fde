"""Command-line interface.

Subcommands: compute (one profile's indices), table (a directory's
report table), merge (pool profiles into a collective), plot (SVG or
point-series export) and compare (one author across sources).  The
CITEMETRIC_FORMAT environment variable supplies the default --format
when it names a format the subcommand supports.  A path of '-' reads a
JSON profile document from stdin.  Exit code 0 means no error
diagnostic was emitted.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from pathlib import Path
from typing import Sequence

from .collective import collective_report, merge_profiles
from .errors import CitemetricError
from .indices import IndexReport, compute_report
from .ingest import (
    ProfileDocument,
    format_real,
    parse_profile,
    scan_directory,
    write_profile,
    write_report_table,
)
from .render import build_plot_spec, render_svg, write_points_csv

_TEXT_FIELDS = (
    "author_id", "r0", "r", "c_sigma", "c10", "c_max", "c_s",
    "h", "g", "m", "i10", "kh1", "kh2", "kh3", "kh",
)


def _default_format(valid: tuple[str, ...], fallback: str) -> str:
    env = os.environ.get("CITEMETRIC_FORMAT", "").strip().lower()
    return env if env in valid else fallback


def _load_document(path: str) -> ProfileDocument:
    if path == "-":
        return parse_profile(sys.stdin, fmt="json")
    return parse_profile(Path(path))


def _emit_text(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_bytes(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)


def _report_text(report: IndexReport) -> str:
    lines = []
    for field in _TEXT_FIELDS:
        value = getattr(report, field)
        if isinstance(value, float) or value is None:
            value = format_real(value)
        lines.append(f"{field}: {value}")
    return "\n".join(lines) + "\n"


def cmd_compute(args: argparse.Namespace) -> int:
    report = compute_report(_load_document(args.path).to_profile())
    if args.format == "text":
        _emit_text(_report_text(report), args.output)
    else:
        _emit_text(write_report_table([report], "csv", include_kh=args.include_kh), args.output)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    result = scan_directory(args.directory)
    for failure in result.failures:
        print(f"error: {failure.path}: {failure.error}", file=sys.stderr)
    if not result.documents:
        print(f"error: no readable profiles in {args.directory}", file=sys.stderr)
        return 1
    profiles = [doc.to_profile() for doc in result.documents]
    profiles.sort(key=lambda p: (-p.c_max, p.author_id))
    reports = [compute_report(profile) for profile in profiles]
    total = None
    if args.with_total:
        total = collective_report(merge_profiles(profiles, label="total"))
    _emit_text(
        write_report_table(reports, args.format, include_kh=args.include_kh, total=total),
        args.output,
    )
    return 1 if result.failures else 0


def cmd_merge(args: argparse.Namespace) -> int:
    profiles = [_load_document(path).to_profile() for path in args.paths]
    collective = merge_profiles(profiles, label=args.label)
    document = ProfileDocument(
        author_id=collective.merged.author_id,
        citations=collective.merged.counts,
    )
    report = collective_report(collective)
    if args.output:
        Path(args.output).write_text(write_profile(document, "json"), encoding="utf-8")
    else:
        sys.stdout.write(write_profile(document, "json"))
        sys.stdout.write("\n")
    if args.format == "text":
        sys.stdout.write(_report_text(report))
    else:
        sys.stdout.write(write_report_table([report], "csv", include_kh=args.include_kh))
    return 0


def cmd_plot(args: argparse.Namespace) -> int:
    profiles = [_load_document(path).to_profile() for path in args.paths]
    items: list = list(profiles)
    dashed: set[str] = set()
    if args.with_merged:
        collective = merge_profiles(profiles, label=args.label)
        items.append(collective)
        dashed.add(collective.merged.author_id)
    spec = build_plot_spec(
        items,
        guides=args.guides,
        include_g=args.include_g,
        log_y=args.log_y,
        dashed=dashed,
    )
    if args.format == "svg":
        _emit_bytes(render_svg(spec), args.output)
    else:
        _emit_text(write_points_csv(spec), args.output)
    return 0


def _compare_rows(documents: Sequence[ProfileDocument]) -> tuple[list[str], list[list[str]]]:
    header = ["source", "r0", "r", "c_sigma", "mean_per_work", "mean_per_cited", "h", "i10"]
    columns: list[list[float | None]] = [[] for _ in range(len(header) - 1)]
    rows: list[list[str]] = []
    for doc in documents:
        profile = doc.to_profile()
        report = compute_report(profile)
        values: list[float | None] = [
            report.r0,
            report.r,
            report.c_sigma,
            report.c_sigma / report.r0 if report.r0 > 0 else None,
            report.c_sigma / report.r if report.r > 0 else None,
            report.h,
            report.i10,
        ]
        for column, value in zip(columns, values):
            column.append(value)
        cells = [doc.source or doc.author_id]
        for value in values:
            if value is None:
                cells.append("-")
            elif isinstance(value, float):
                cells.append(format_real(value))
            else:
                cells.append(str(value))
        rows.append(cells)
    ratio = ["max/min"]
    for column in columns:
        if any(value is None for value in column) or min(column) <= 0:  # type: ignore[type-var]
            ratio.append("-")
        else:
            ratio.append(format_real(max(column) / min(column)))  # type: ignore[arg-type]
    rows.append(ratio)
    return header, rows


def cmd_compare(args: argparse.Namespace) -> int:
    documents = [_load_document(path) for path in args.paths]
    header, rows = _compare_rows(documents)
    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        _emit_text(buffer.getvalue(), args.output)
    else:
        lines = [
            "| " + " | ".join(header) + " |",
            "| " + " | ".join("---" for _ in header) + " |",
        ]
        lines.extend("| " + " | ".join(row) + " |" for row in rows)
        _emit_text("\n".join(lines) + "\n", args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="citemetric",
        description="Citation-curve indices, report tables and charts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="indices for one profile file")
    p.add_argument("path", help="profile file, or - for JSON on stdin")
    p.add_argument("--format", choices=("text", "csv"), default=_default_format(("text", "csv"), "text"))
    p.add_argument("--include-kh", action="store_true", help="append the kh column to CSV output")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="report table for a directory of profiles")
    p.add_argument("directory")
    p.add_argument("--format", choices=("csv", "md"), default=_default_format(("csv", "md"), "csv"))
    p.add_argument("--with-total", action="store_true", help="append the pooled row")
    p.add_argument("--include-kh", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("merge", help="pool profiles into one collective")
    p.add_argument("paths", nargs="+")
    p.add_argument("--label", help="author id for the merged profile")
    p.add_argument("--format", choices=("text", "csv"), default=_default_format(("text", "csv"), "text"))
    p.add_argument("--include-kh", action="store_true")
    p.add_argument("-o", "--output", help="write the merged document here; report goes to stdout")
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("plot", help="render profiles as SVG or a point-series CSV")
    p.add_argument("paths", nargs="+")
    p.add_argument("--format", choices=("svg", "csv"), default=_default_format(("svg", "csv"), "svg"))
    p.add_argument("--log-y", action="store_true", dest="log_y")
    p.add_argument("--guides", action="store_true", help="draw the unit, mean and sqrt-total rays")
    p.add_argument("--with-merged", action="store_true", help="overlay the pooled curve, dashed")
    p.add_argument("--include-g", action="store_true", help="also mark the g index")
    p.add_argument("--label", help="label for the pooled curve", default="merged")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("compare", help="one author across reporting sources")
    p.add_argument("paths", nargs="+")
    p.add_argument("--format", choices=("csv", "md"), default=_default_format(("csv", "md"), "csv"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "compare" and len(args.paths) < 2:
        parser.error("compare needs at least two profile files")
    try:
        return args.func(args)
    except (CitemetricError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
