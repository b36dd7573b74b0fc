#!/usr/bin/env python
# coding: utf-8
import numpy as np
from dataclasses import dataclass

from glyphcluster._config import MATRIX_SIZE
from glyphcluster.errors import InvalidInputError
from glyphcluster.options import PreprocessOptions
from glyphcluster.options.preprocess import DEFAULT_COVERAGE
from glyphcluster.preprocess.binarize import binarize
from glyphcluster.preprocess.image import Bitmap, CharMatrix, GrayImage

# absorbs rounding in the coverage products
_COVERAGE_EPS = 1e-9


@dataclass
class CropResult:
    bitmap: Bitmap
    # True when the input had no ink and was returned unchanged
    empty: bool


def crop_to_content(bmp: Bitmap) -> CropResult:
    """Cut the bitmap down to the bounding box of its ink."""
    rows = np.flatnonzero(bmp.bits.any(axis=1))
    if rows.size == 0:
        return CropResult(bitmap=bmp, empty=True)
    cols = np.flatnonzero(bmp.bits.any(axis=0))
    cropped = bmp.bits[rows[0]:rows[-1] + 1, cols[0]:cols[-1] + 1]
    return CropResult(bitmap=Bitmap(cropped.copy()), empty=False)


def _axis_weights(source: int, target: int = MATRIX_SIZE) -> np.ndarray:
    """(target, source) matrix mapping source pixels onto target cells.

    Downscaling uses the share of each source pixel inside the cell's preimage
    interval, normalized by the interval length. Upscaling replicates the
    nearest source pixel.
    """
    if source < target:
        weights = np.zeros((target, source), dtype=np.float64)
        weights[np.arange(target), (np.arange(target) * source) // target] = 1.0
        return weights
    scale = source / target
    starts = np.arange(target, dtype=np.float64)[:, None] * scale
    ends = starts + scale
    pixels = np.arange(source, dtype=np.float64)[None, :]
    overlap = np.minimum(ends, pixels + 1) - np.maximum(starts, pixels)
    return np.clip(overlap, 0.0, None) / scale


def block_coverage(bmp: Bitmap) -> np.ndarray:
    """Ink fraction of every output cell's preimage rectangle, shape (32, 32)."""
    row_weights = _axis_weights(bmp.height)
    col_weights = _axis_weights(bmp.width)
    return row_weights @ bmp.bits.astype(np.float64) @ col_weights.T


def normalize_32(bmp: Bitmap, coverage: float = DEFAULT_COVERAGE) -> CharMatrix:
    if bmp.bits.size == 0 or not bmp.bits.any():
        raise InvalidInputError("cannot normalize a bitmap without ink")
    fractions = block_coverage(bmp)
    bits = (fractions >= coverage - _COVERAGE_EPS).astype(np.uint8)
    if not bits.any():
        # thin strokes: keep the densest cell
        bits.flat[int(np.argmax(fractions))] = 1
    return CharMatrix(bits)


def image_to_matrix(img: GrayImage, options: PreprocessOptions = None) -> CharMatrix:
    """binarize -> crop_to_content -> normalize_32."""
    opts = PreprocessOptions() if options is None else options
    cropped = crop_to_content(binarize(img, opts.threshold))
    if cropped.empty:
        raise InvalidInputError("image contains no ink after binarization")
    return normalize_32(cropped.bitmap, opts.coverage)
