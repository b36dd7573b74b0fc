#!/usr/bin/env python
# coding: utf-8
from .lines import LineFamily, LineSpec, line_cells, line_length
from .extractor import FeatureVector, FEATURE_SEGMENTS, NO_INK, feature_names
from .extractor import extract, extract_batch
from .extractor import horizontal_histograms, vertical_histograms, diagonal_histograms, antidiagonal_histograms
from .extractor import out_in_profiles, in_out_profiles
from .oracle import oracle_extract
