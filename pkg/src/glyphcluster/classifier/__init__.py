#!/usr/bin/env python
# coding: utf-8
from .kmeans import KMeansResult, kmeans_fit, kmeans_plusplus
from .codebook import CATEGORIES, Choice, Codebook, Model, RankedChoices, classify, rank_classes, train
from .model_file import dump_model, load_model, parse_model, save_model
