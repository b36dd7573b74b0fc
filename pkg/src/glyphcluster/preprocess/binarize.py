#!/usr/bin/env python
# coding: utf-8
import logging
import math
from typing import Union

import numpy as np
from skimage.filters import threshold_otsu

from glyphcluster.errors import InvalidInputError
from glyphcluster.options import PreprocessOptions
from glyphcluster.options.preprocess import FALLBACK_FIXED_THRESHOLD
from glyphcluster.preprocess.image import Bitmap, GrayImage


def otsu_threshold(img: GrayImage) -> int:
    """Smallest intensity that Otsu's method puts in the background (white) class.

    Images with a single intensity have no between-class variance to maximize,
    they fall back to the fixed threshold.
    """
    samples = img.samples
    if samples.min() == samples.max():
        logging.debug(f"uniform image, otsu falls back to {FALLBACK_FIXED_THRESHOLD}")
        return FALLBACK_FIXED_THRESHOLD
    # skimage treats `samples > t` as foreground, so dark pixels are `samples <= t`
    return int(math.floor(threshold_otsu(samples))) + 1


def binarize(img: GrayImage, threshold_mode: Union[str, int] = "otsu") -> Bitmap:
    """Map a grayscale image to ink bits: 1 iff intensity is strictly below the threshold."""
    if img.samples.size == 0:
        raise InvalidInputError("cannot binarize an empty image")
    fixed = PreprocessOptions(threshold=threshold_mode).get_fixed_threshold()
    threshold = otsu_threshold(img) if fixed is None else fixed
    return Bitmap((img.samples.astype(np.int32) < threshold).astype(np.uint8))
