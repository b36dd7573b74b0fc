#!/usr/bin/env python
# coding: utf-8
from .samples import ALPHABETS, LabeledSample, scan_dataset, parse_filename, check_labels, category_classes
from .manifest import BUILTIN_MANIFESTS, Selector, SplitManifest, WriterRange
from .manifest import apply_split, load_manifest, parse_manifest
