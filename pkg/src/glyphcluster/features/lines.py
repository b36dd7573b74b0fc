#!/usr/bin/env python
# coding: utf-8
"""Lines perpendicular to the diagonal and the antidiagonal of the character matrix.

Each line is indexed by n in [1, 16] and walked by the offset k >= 0, starting on the
(anti)diagonal and moving towards the periphery. Coordinates are one-based (row, column).
"""
import enum
from functools import lru_cache
from typing import Callable, Dict, Tuple

from dataclasses import dataclass

from glyphcluster._config import MATRIX_SIZE, SEGMENT_LENGTH
from glyphcluster.errors import InvalidArgumentError

Cell = Tuple[int, int]


class LineFamily(str, enum.Enum):
    UPPER_DIAG = "upper-diag"
    LOWER_DIAG = "lower-diag"
    UPPER_ANTIDIAG = "upper-antidiag"
    LOWER_ANTIDIAG = "lower-antidiag"


@dataclass(frozen=True)
class LineSpec:
    family: LineFamily
    n: int
    # cells[k] is the cell at offset k
    cells: Tuple[Cell, ...]

    def __len__(self) -> int:
        return len(self.cells)


# family -> (cell at offset k, bound conditions of the defining sums)
_LINE_RULES: Dict[LineFamily, Tuple[Callable[[int, int], Cell], Callable[[int, int], bool]]] = {
    LineFamily.UPPER_DIAG: (
        lambda n, k: (2 * n - 1 - k, 2 * n - 1 + k),
        lambda n, k: 2 * n - 1 - k >= 1 and 2 * n - 1 + k <= MATRIX_SIZE,
    ),
    LineFamily.LOWER_DIAG: (
        lambda n, k: (2 * n + k, 2 * n - k),
        lambda n, k: 2 * n - k >= 1 and 2 * n + k <= MATRIX_SIZE,
    ),
    LineFamily.UPPER_ANTIDIAG: (
        lambda n, k: (2 * n - k, 33 - 2 * n - k),
        lambda n, k: 2 * n - k >= 1 and 33 - 2 * n - k >= 1,
    ),
    LineFamily.LOWER_ANTIDIAG: (
        lambda n, k: (2 * n - 1 + k, 34 - 2 * n + k),
        lambda n, k: 2 * n - 1 + k <= MATRIX_SIZE and 34 - 2 * n + k <= MATRIX_SIZE,
    ),
}


@lru_cache(maxsize=None)
def _enumerate(family: LineFamily, n: int) -> LineSpec:
    cell_at, in_bounds = _LINE_RULES[family]
    cells = []
    k = 0
    # the bound conditions are monotone in k
    while in_bounds(n, k):
        cells.append(cell_at(n, k))
        k += 1
    return LineSpec(family=family, n=n, cells=tuple(cells))


def line_cells(family, n: int) -> LineSpec:
    try:
        family = LineFamily(family)
    except ValueError as ex:
        raise InvalidArgumentError(f"unknown line family {family!r}") from ex
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= SEGMENT_LENGTH:
        raise InvalidArgumentError(f"line index n should be in [1, {SEGMENT_LENGTH}], got {n!r}")
    return _enumerate(family, n)


def line_length(family, n: int) -> int:
    return len(line_cells(family, n))
