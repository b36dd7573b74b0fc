#!/usr/bin/env python
# coding: utf-8
from .report import AccuracyReport, ConfusionMatrix, DEFAULT_DEPTHS, evaluate
from .emit import REPORT_FORMATS, REPORT_SUFFIXES, emit_report, format_table, load_reports_json, ordinal
