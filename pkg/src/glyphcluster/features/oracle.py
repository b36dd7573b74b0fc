#!/usr/bin/env python
# coding: utf-8
"""Reference feature computation by literal enumeration of the defining sums.

Shares no line geometry with `extract`: lines come from `line_cells`, walked cell by cell.
"""
from typing import List

from glyphcluster._config import HALF_SIZE, MATRIX_SIZE, SEGMENT_LENGTH
from glyphcluster.features.extractor import FeatureVector, NO_INK, SEGMENT_FAMILIES
from glyphcluster.features.lines import line_cells
from glyphcluster.preprocess.image import CharMatrix


def oracle_extract(matrix: CharMatrix) -> FeatureVector:
    grid = matrix.bits.tolist()

    def f(l: int, m: int) -> int:  # noqa: E741
        return grid[l - 1][m - 1]

    indices = range(1, SEGMENT_LENGTH + 1)
    h_hl = [sum(f(2 * n, m) for m in range(1, HALF_SIZE + 1)) for n in indices]
    h_hr = [sum(f(2 * n - 1, m) for m in range(HALF_SIZE, MATRIX_SIZE + 1)) for n in indices]
    h_vu = [sum(f(m, 2 * n) for m in range(1, HALF_SIZE + 1)) for n in indices]
    h_vl = [sum(f(m, 2 * n - 1) for m in range(HALF_SIZE, MATRIX_SIZE + 1)) for n in indices]

    line_histograms: List[List[int]] = []
    out_in: List[List[int]] = []
    in_out: List[List[int]] = []
    for family in SEGMENT_FAMILIES:
        counts, outer, inner = [], [], []
        for n in indices:
            black = [k for k, (row, col) in enumerate(line_cells(family, n).cells) if f(row, col) == 1]
            counts.append(len(black))
            outer.append(max(black) if black else NO_INK)
            inner.append(min(black) if black else NO_INK)
        line_histograms.append(counts)
        out_in.append(outer)
        in_out.append(inner)

    values: List[int] = h_hl + h_hr + h_vu + h_vl
    for segment in line_histograms + out_in + in_out:
        values += segment
    return FeatureVector(values)
