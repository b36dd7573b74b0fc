#!/usr/bin/env python
# coding: utf-8
from ._version import __version__, version_info

from .preprocess import CharMatrix
from .features import FeatureVector, extract, oracle_extract
from .classifier import Model, classify, train
