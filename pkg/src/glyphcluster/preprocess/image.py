#!/usr/bin/env python
# coding: utf-8
import os
from typing import Union

import numpy as np
from dataclasses import dataclass
from PIL import Image, UnidentifiedImageError

from glyphcluster._config import MATRIX_SIZE
from glyphcluster.errors import InvalidInputError

PathLike = Union[str, "os.PathLike[str]"]


@dataclass(eq=False)
class GrayImage:
    """8-bit grayscale image, samples stored row-major as a (height, width) uint8 array."""
    samples: np.ndarray

    def __post_init__(self):
        samples = np.asarray(self.samples)
        if samples.ndim != 2 or samples.shape[0] < 1 or samples.shape[1] < 1:
            raise InvalidInputError(f"image should be a non-empty 2d array, got shape {samples.shape}")
        if samples.dtype != np.uint8:
            if samples.size and (samples.min() < 0 or samples.max() > 255):
                raise InvalidInputError("image intensities should be in [0, 255]")
            samples = samples.astype(np.uint8)
        self.samples = samples

    @property
    def width(self) -> int:
        return int(self.samples.shape[1])

    @property
    def height(self) -> int:
        return int(self.samples.shape[0])


@dataclass(eq=False)
class Bitmap:
    """Binary image, 1 is ink (black) and 0 is background (white)."""
    bits: np.ndarray

    def __post_init__(self):
        bits = np.asarray(self.bits)
        if bits.ndim != 2:
            raise InvalidInputError(f"bitmap should be a 2d array, got shape {bits.shape}")
        if bits.size and not np.isin(bits, (0, 1)).all():
            raise InvalidInputError("bitmap entries should be 0 or 1")
        self.bits = bits.astype(np.uint8)

    @property
    def width(self) -> int:
        return int(self.bits.shape[1])

    @property
    def height(self) -> int:
        return int(self.bits.shape[0])

    def ink_count(self) -> int:
        return int(self.bits.sum())

    def __eq__(self, other):
        if not isinstance(other, Bitmap):
            return NotImplemented
        return self.bits.shape == other.bits.shape and bool(np.array_equal(self.bits, other.bits))


@dataclass(eq=False)
class CharMatrix:
    """The normalized 32x32 character matrix.

    Stored zero-based; `f(l, m)` gives the one-based access used by the feature definitions.
    """
    bits: np.ndarray

    def __post_init__(self):
        bits = np.asarray(self.bits)
        if bits.shape != (MATRIX_SIZE, MATRIX_SIZE):
            raise InvalidInputError(f"character matrix should be {MATRIX_SIZE}x{MATRIX_SIZE}, got {bits.shape}")
        if not np.isin(bits, (0, 1)).all():
            raise InvalidInputError("character matrix entries should be 0 or 1")
        self.bits = bits.astype(np.uint8)

    def f(self, l: int, m: int) -> int:  # noqa: E741
        return int(self.bits[l - 1, m - 1])

    def ink_count(self) -> int:
        return int(self.bits.sum())

    def __eq__(self, other):
        if not isinstance(other, CharMatrix):
            return NotImplemented
        return bool(np.array_equal(self.bits, other.bits))

    @classmethod
    def blank(cls) -> "CharMatrix":
        return cls(np.zeros((MATRIX_SIZE, MATRIX_SIZE), dtype=np.uint8))


def load_gray_image(path: PathLike) -> GrayImage:
    """Decode a PNG or BMP file into 8-bit luminance."""
    try:
        with Image.open(path) as image:
            samples = np.asarray(image.convert("L"), dtype=np.uint8)
    except (OSError, UnidentifiedImageError) as ex:
        raise InvalidInputError(f"cannot decode image {path}: {ex}") from ex
    return GrayImage(samples)


def load_char_matrix_text(path: PathLike) -> CharMatrix:
    """Read a 32 line x 32 character fixture of '0'/'1' characters."""
    try:
        with open(path, encoding="utf-8") as f_matrix:
            rows = f_matrix.read().splitlines()
    except (OSError, UnicodeDecodeError) as ex:
        raise InvalidInputError(f"cannot read matrix file {path}: {ex}") from ex
    if len(rows) != MATRIX_SIZE:
        raise InvalidInputError(f"matrix file {path} should have {MATRIX_SIZE} rows, got {len(rows)}")
    for idx, row in enumerate(rows, start=1):
        if len(row) != MATRIX_SIZE or set(row) - {"0", "1"}:
            raise InvalidInputError(f"matrix file {path}: row {idx} should be {MATRIX_SIZE} characters of 0/1")
    return CharMatrix(np.array([[int(char) for char in row] for row in rows], dtype=np.uint8))


def dump_char_matrix_text(matrix: CharMatrix, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f_matrix:
        for row in matrix.bits:
            f_matrix.write("".join(str(int(value)) for value in row) + "\n")
