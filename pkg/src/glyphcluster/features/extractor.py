#!/usr/bin/env python
# coding: utf-8
from typing import Dict, List, Tuple

import numpy as np
from dataclasses import dataclass

from glyphcluster._config import FEATURE_DIM, HALF_SIZE, MATRIX_SIZE, SEGMENT_LENGTH
from glyphcluster.errors import InvalidInputError
from glyphcluster.features.lines import LineFamily
from glyphcluster.preprocess.image import CharMatrix

HISTOGRAM_SEGMENTS = ("H_hl", "H_hr", "H_vu", "H_vl", "H_ud", "H_ld", "H_uad", "H_lad")
OUT_IN_SEGMENTS = ("P_oiud", "P_oild", "P_oiuad", "P_oilad")
IN_OUT_SEGMENTS = ("P_ioud", "P_iold", "P_iouad", "P_iolad")
FEATURE_SEGMENTS = HISTOGRAM_SEGMENTS + OUT_IN_SEGMENTS + IN_OUT_SEGMENTS

# diagonal families in the order their segments appear
SEGMENT_FAMILIES = (
    LineFamily.UPPER_DIAG,
    LineFamily.LOWER_DIAG,
    LineFamily.UPPER_ANTIDIAG,
    LineFamily.LOWER_ANTIDIAG,
)

NO_INK = -1


def feature_names() -> List[str]:
    """Column names `H_hl_01` ... `P_iolad_16` in vector order."""
    return [f"{segment}_{n:02d}" for segment in FEATURE_SEGMENTS for n in range(1, SEGMENT_LENGTH + 1)]


@dataclass(eq=False)
class FeatureVector:
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values)
        if values.shape != (FEATURE_DIM,):
            raise InvalidInputError(f"feature vector should have {FEATURE_DIM} values, got shape {values.shape}")
        self.values = values.astype(np.int64)

    def __eq__(self, other):
        if not isinstance(other, FeatureVector):
            return NotImplemented
        return bool(np.array_equal(self.values, other.values))

    def __len__(self) -> int:
        return FEATURE_DIM

    def segment(self, name: str) -> np.ndarray:
        try:
            idx = FEATURE_SEGMENTS.index(name)
        except ValueError as ex:
            raise KeyError(f"unknown feature segment {name}") from ex
        return self.values[idx * SEGMENT_LENGTH:(idx + 1) * SEGMENT_LENGTH]

    def segments(self) -> Dict[str, List[int]]:
        return {name: self.segment(name).tolist() for name in FEATURE_SEGMENTS}

    def to_csv_line(self) -> str:
        return ",".join(str(int(value)) for value in self.values)

    def describe(self) -> str:
        """Segment-annotated dump, one line per segment."""
        width = max(len(name) for name in FEATURE_SEGMENTS)
        return "\n".join(
            f"{name:<{width}}: " + " ".join(f"{value:>2d}" for value in values)
            for name, values in self.segments().items()
        )


def _line_position(family: LineFamily, row: int, col: int) -> Tuple[int, int]:
    """(n, k) of a one-based cell on a family's lines, or (0, -1) when off every line.

    Inverse of the line parametrization: the upper/lower diagonal lines are the
    anti-diagonal strips row + col = 4n - 2 / 4n, the antidiagonal lines the
    strips row - col = 4n - 33 / 4n - 35.
    """
    total = row + col
    diff = row - col
    if family is LineFamily.UPPER_DIAG:
        if total % 4 == 2 and col >= row:
            return (total + 2) // 4, (col - row) // 2
    elif family is LineFamily.LOWER_DIAG:
        if total % 4 == 0 and row >= col:
            return total // 4, (row - col) // 2
    elif family is LineFamily.UPPER_ANTIDIAG:
        if (diff + 33) % 4 == 0 and total <= MATRIX_SIZE + 1:
            return (diff + 33) // 4, (MATRIX_SIZE + 1 - total) // 2
    elif family is LineFamily.LOWER_ANTIDIAG:
        if (diff + 35) % 4 == 0 and total >= MATRIX_SIZE + 1:
            return (diff + 35) // 4, (total - MATRIX_SIZE - 1) // 2
    return 0, -1


def _projection_table(family: LineFamily) -> np.ndarray:
    """(16, L_max) table of flat cell positions, row n-1 column k.

    Unused slots point at position MATRIX_SIZE**2, a padding pixel that is always white.
    """
    positions: Dict[int, Dict[int, int]] = {n: {} for n in range(1, SEGMENT_LENGTH + 1)}
    for row in range(1, MATRIX_SIZE + 1):
        for col in range(1, MATRIX_SIZE + 1):
            n, k = _line_position(family, row, col)
            if 1 <= n <= SEGMENT_LENGTH:
                positions[n][k] = (row - 1) * MATRIX_SIZE + (col - 1)
    longest = max(len(line) for line in positions.values())
    table = np.full((SEGMENT_LENGTH, longest), MATRIX_SIZE * MATRIX_SIZE, dtype=np.intp)
    for n, line in positions.items():
        for k, position in line.items():
            table[n - 1, k] = position
    return table


_PROJECTION_TABLES = {family: _projection_table(family) for family in SEGMENT_FAMILIES}


def _as_batch(matrices) -> np.ndarray:
    if isinstance(matrices, np.ndarray):
        bits = matrices
    elif len(matrices) == 0:
        bits = np.zeros((0, MATRIX_SIZE, MATRIX_SIZE), dtype=np.int64)
    else:
        bits = np.stack([matrix.bits if isinstance(matrix, CharMatrix) else np.asarray(matrix) for matrix in matrices])
    if bits.ndim == 2:
        bits = bits[None]
    if bits.shape[1:] != (MATRIX_SIZE, MATRIX_SIZE):
        raise InvalidInputError(f"expected a batch of {MATRIX_SIZE}x{MATRIX_SIZE} matrices, got shape {bits.shape}")
    return bits.astype(np.int64)


def _line_features(flat: np.ndarray, family: LineFamily) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Histogram, out-in and in-out profiles of one family over a padded flat batch."""
    lines = flat[:, _PROJECTION_TABLES[family]]
    counts = lines.sum(axis=2)
    longest = lines.shape[2]
    in_out = np.argmax(lines, axis=2)
    out_in = longest - 1 - np.argmax(lines[:, :, ::-1], axis=2)
    empty = counts == 0
    return counts, np.where(empty, NO_INK, out_in), np.where(empty, NO_INK, in_out)


def _padded_flat(bits: np.ndarray) -> np.ndarray:
    size = bits.shape[0]
    flat = np.zeros((size, MATRIX_SIZE * MATRIX_SIZE + 1), dtype=np.int64)
    flat[:, :-1] = bits.reshape(size, -1)
    return flat


def _horizontal(bits: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    # even rows of the left half, odd rows of columns 16..32
    return bits[:, 1::2, :HALF_SIZE].sum(axis=2), bits[:, 0::2, HALF_SIZE - 1:].sum(axis=2)


def _vertical(bits: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return bits[:, :HALF_SIZE, 1::2].sum(axis=1), bits[:, HALF_SIZE - 1:, 0::2].sum(axis=1)


def extract_batch(matrices) -> np.ndarray:
    """Feature table of shape (N, 256) for a sequence of CharMatrix (or an (N, 32, 32) array)."""
    bits = _as_batch(matrices)
    flat = _padded_flat(bits)
    histograms = list(_horizontal(bits) + _vertical(bits))
    out_in, in_out = [], []
    for family in SEGMENT_FAMILIES:
        counts, outer, inner = _line_features(flat, family)
        histograms.append(counts)
        out_in.append(outer)
        in_out.append(inner)
    return np.concatenate(histograms + out_in + in_out, axis=1).astype(np.int64)


def extract(matrix: CharMatrix) -> FeatureVector:
    return FeatureVector(extract_batch([matrix])[0])


def horizontal_histograms(matrix: CharMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """(H_hl, H_hr)."""
    left, right = _horizontal(_as_batch([matrix]))
    return left[0], right[0]


def vertical_histograms(matrix: CharMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """(H_vu, H_vl)."""
    upper, lower = _vertical(_as_batch([matrix]))
    return upper[0], lower[0]


def _family_features(matrix: CharMatrix, family: LineFamily) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    counts, outer, inner = _line_features(_padded_flat(_as_batch([matrix])), family)
    return counts[0], outer[0], inner[0]


def diagonal_histograms(matrix: CharMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """(H_ud, H_ld)."""
    return _family_features(matrix, LineFamily.UPPER_DIAG)[0], _family_features(matrix, LineFamily.LOWER_DIAG)[0]


def antidiagonal_histograms(matrix: CharMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """(H_uad, H_lad)."""
    return (
        _family_features(matrix, LineFamily.UPPER_ANTIDIAG)[0],
        _family_features(matrix, LineFamily.LOWER_ANTIDIAG)[0],
    )


def out_in_profiles(matrix: CharMatrix) -> Tuple[np.ndarray, ...]:
    """(P_oiud, P_oild, P_oiuad, P_oilad)."""
    return tuple(_family_features(matrix, family)[1] for family in SEGMENT_FAMILIES)


def in_out_profiles(matrix: CharMatrix) -> Tuple[np.ndarray, ...]:
    """(P_ioud, P_iold, P_iouad, P_iolad)."""
    return tuple(_family_features(matrix, family)[2] for family in SEGMENT_FAMILIES)
