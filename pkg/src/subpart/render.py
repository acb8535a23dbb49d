"""Serialization of results to text, JSON, and CSV.

Counts are arbitrary-precision integers and are rendered as decimal
strings in JSON.  CSV rendering is byte-stable: identical inputs give
identical bytes whatever produced them, floats written with round-trip
repr and rows terminated by a bare newline.
"""

from __future__ import annotations

import csv
import io
import json

from .counting import CountResult, EnvelopeBound
from .maximizer import MaximizerReport, ShapeReport
from .partitions import format_partition

MAXIMIZE_COLUMNS = [
    "n",
    "k",
    "maximizer",
    "max_count",
    "exponent",
    "hr_reference",
    "distance_to_vershik",
]


def to_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def count_payload(result: CountResult) -> dict:
    return {
        "value": str(result.value),
        "method": result.method,
        "params": result.params,
    }


def bound_payload(lam_text: str, bound: EnvelopeBound) -> dict:
    return {
        "partition": lam_text,
        "log_bound": bound.log_value,
        "bound": bound.value,
    }


def report_payload(report: MaximizerReport) -> dict:
    return {
        "n": report.n,
        "k": report.k,
        "maximizers": [format_partition(m) for m in report.maximizers],
        "max_count": str(report.max_count.value),
        "exponent": report.exponent,
        "hr_reference": report.hr_reference,
        "distance_to_vershik": report.distance_to_vershik,
    }


def report_row(report: MaximizerReport) -> list[str]:
    return [
        str(report.n),
        str(report.k),
        ";".join(format_partition(m) for m in report.maximizers),
        str(report.max_count.value),
        repr(report.exponent),
        repr(report.hr_reference),
        repr(report.distance_to_vershik),
    ]


def reports_csv(reports: list[MaximizerReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(MAXIMIZE_COLUMNS)
    for report in reports:
        writer.writerow(report_row(report))
    return buf.getvalue()


def report_text(report: MaximizerReport) -> str:
    lines = [
        f"n {report.n}",
        f"k {report.k}",
        "maximizers " + "; ".join(format_partition(m) for m in report.maximizers),
        f"max_count {report.max_count.value}",
        f"exponent {report.exponent:.9f}",
        f"hr_reference {report.hr_reference:.9f}",
        f"distance_to_vershik {report.distance_to_vershik:.9f}",
    ]
    return "\n".join(lines) + "\n"


def shape_payload(report: ShapeReport, svg_path: str) -> dict:
    return {
        "n": report.n,
        "k": report.k,
        "partition": format_partition(report.partition),
        "profile_distance": report.profile_distance,
        "envelope_distance": report.envelope_distance,
        "envelope_functional": report.envelope_functional,
        "svg": svg_path,
    }
