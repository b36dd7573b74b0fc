"""Synthetic character data for pipeline and command line tests."""
from pathlib import Path

import numpy as np
from PIL import Image

from glyphcluster.preprocess import CharMatrix, dump_char_matrix_text


def digit_matrix(digit: int) -> CharMatrix:
    """A horizontal band whose height position encodes the digit."""
    bits = np.zeros((32, 32), dtype=np.uint8)
    bits[3 * digit:3 * digit + 2, 2:30] = 1
    return CharMatrix(bits)


def digit_image(digit: int, size: int = 64) -> np.ndarray:
    """Grayscale rendering of `digit_matrix`, scaled up by an integer factor.

    The corner marks keep the full frame after cropping, so the rendering differs
    from `digit_matrix` in cells (1, 1) and (32, 32) only.
    """
    scale = size // 32
    ink = np.kron(digit_matrix(digit).bits, np.ones((scale, scale), dtype=np.uint8))
    ink[:scale, :scale] = 1
    ink[-scale:, -scale:] = 1
    return np.where(ink == 1, 0, 255).astype(np.uint8)


def write_digits_dataset(root: Path, writers, png_writers=()) -> Path:
    """`root/<digit>/F<writer>_<digit>` files, PNG renderings for `png_writers` and text matrices otherwise."""
    for digit in range(10):
        label_dir = root / str(digit)
        label_dir.mkdir(parents=True, exist_ok=True)
        for writer in writers:
            name = f"F{writer:04d}_{digit:02d}"
            if writer in png_writers:
                Image.fromarray(digit_image(digit)).save(label_dir / f"{name}.png")
            else:
                dump_char_matrix_text(digit_matrix(digit), label_dir / f"{name}.txt")
    return root
