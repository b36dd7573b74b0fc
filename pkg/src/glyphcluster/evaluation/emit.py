#!/usr/bin/env python
# coding: utf-8
import json
from typing import List, Sequence, Union

import pandas as pd

from glyphcluster.errors import InvalidArgumentError, ReportWriteError
from glyphcluster.evaluation.report import AccuracyReport
from glyphcluster.utils import ReportEncoder

REPORT_FORMATS = ("text", "csv", "json")
REPORT_SUFFIXES = {"text": ".txt", "csv": ".csv", "json": ".json"}

Reports = Union[AccuracyReport, Sequence[AccuracyReport]]


def ordinal(value: int) -> str:
    if 10 <= value % 100 <= 20:
        suffix = "th"
    else:
        suffix = {1: "st", 2: "nd", 3: "rd"}.get(value % 10, "th")
    return f"{value}{suffix}"


def _as_list(reports: Reports) -> List[AccuracyReport]:
    return [reports] if isinstance(reports, AccuracyReport) else list(reports)


def _depths(reports: Sequence[AccuracyReport]) -> List[int]:
    return sorted({depth for report in reports for depth in report.acc_at})


def format_table(reports: Reports, per_class: bool = True) -> str:
    """Accuracy table, one row per category, percentages with two decimals."""
    reports = _as_list(reports)
    depths = _depths(reports)
    headers = [f"{ordinal(depth)} Choice" for depth in depths]
    width = max([len("Category")] + [len(report.category) for report in reports])
    lines = ["  ".join([f"{'Category':<{width}}"] + headers)]
    for report in reports:
        cells = [
            f"{report.acc_at[depth]:.2f}%" if depth in report.acc_at else "-"
            for depth in depths
        ]
        lines.append("  ".join([f"{report.category:<{width}}"] + [
            f"{cell:>{len(header)}}" for cell, header in zip(cells, headers)
        ]))
    if per_class:
        for report in reports:
            lines.append("")
            lines.append(f"{report.category}: {report.n_test} test samples, per-class 1st choice accuracy")
            label_width = max([len("Label")] + [len(label) for label in report.per_class_acc])
            lines.append(f"{'Label':<{label_width}}  {'Count':>6}  {'Accuracy':>8}")
            for label, value in report.per_class_acc.items():
                count = report.per_class_count.get(label, 0)
                lines.append(f"{label:<{label_width}}  {count:>6d}  {value:>7.2f}%")
    return "\n".join(lines) + "\n"


def report_frame(reports: Reports) -> pd.DataFrame:
    reports = _as_list(reports)
    depths = _depths(reports)
    rows = []
    for report in reports:
        row = {"category": report.category, "n_test": report.n_test}
        for depth in depths:
            row[f"{ordinal(depth)} Choice"] = round(report.acc_at[depth], 2) if depth in report.acc_at else None
        rows.append(row)
    return pd.DataFrame(rows, columns=["category", "n_test"] + [f"{ordinal(depth)} Choice" for depth in depths])


def emit_report(reports: Reports, fmt: str, path) -> None:
    """Write one or more reports as a text table, CSV rows or JSON."""
    if fmt not in REPORT_FORMATS:
        raise InvalidArgumentError(f"unknown report format {fmt!r}, expected one of {REPORT_FORMATS}")
    reports = _as_list(reports)
    try:
        if fmt == "csv":
            report_frame(reports).to_csv(path, index=False, float_format="%.2f")
            return
        with open(path, "w", encoding="utf-8", newline="\n") as out_file:
            if fmt == "text":
                out_file.write(format_table(reports))
            else:
                json.dump({"reports": reports}, out_file, indent=2, cls=ReportEncoder)
                out_file.write("\n")
    except OSError as ex:
        raise ReportWriteError(f"cannot write report to {path}: {ex}") from ex


def load_reports_json(path) -> List[AccuracyReport]:
    with open(path, encoding="utf-8") as in_file:
        data = json.load(in_file)
    return [AccuracyReport.from_dict(item) for item in data["reports"]]
