#!/usr/bin/env python
# coding: utf-8
from .image import GrayImage, Bitmap, CharMatrix
from .image import load_gray_image, load_char_matrix_text, dump_char_matrix_text
from .binarize import binarize, otsu_threshold
from .normalize import CropResult, crop_to_content, normalize_32, image_to_matrix
