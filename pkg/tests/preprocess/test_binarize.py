import numpy as np
import pytest

from glyphcluster.errors import InvalidInputError
from glyphcluster.preprocess import GrayImage, binarize, otsu_threshold


@pytest.mark.parametrize("value,expected", [
    (255, 0),
    (0, 1),
])
def test_uniform_image_fixed_threshold(value, expected):
    bitmap = binarize(GrayImage(np.full((5, 7), value, dtype=np.uint8)), 128)
    assert bitmap.bits.shape == (5, 7)
    assert (bitmap.bits == expected).all()


def test_strict_inequality():
    bitmap = binarize(GrayImage(np.array([[10], [200]], dtype=np.uint8)), 128)
    assert bitmap.bits.tolist() == [[1], [0]]
    # intensity equal to the threshold is background
    assert binarize(GrayImage(np.array([[128]], dtype=np.uint8)), 128).bits.tolist() == [[0]]


def test_otsu_separates_two_levels():
    samples = np.full((10, 10), 220, dtype=np.uint8)
    samples[2:8, 3:6] = 30
    image = GrayImage(samples)
    threshold = otsu_threshold(image)
    assert 30 < threshold <= 220
    bitmap = binarize(image)
    assert bitmap.bits.sum() == 18
    assert bitmap.bits[2:8, 3:6].all()


def test_otsu_uniform_image_falls_back():
    image = GrayImage(np.full((4, 4), 90, dtype=np.uint8))
    assert otsu_threshold(image) == 128
    assert binarize(image).bits.all()


def test_empty_image():
    with pytest.raises(InvalidInputError):
        GrayImage(np.zeros((0, 3), dtype=np.uint8))


def test_invalid_threshold_mode():
    with pytest.raises(ValueError):
        binarize(GrayImage(np.zeros((2, 2), dtype=np.uint8)), "adaptive")
