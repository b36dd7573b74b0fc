#!/usr/bin/env python
# coding: utf-8
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from dataclasses import dataclass
from joblib import Parallel, delayed

from glyphcluster._config import FEATURE_DIM
from glyphcluster.dataset.samples import LabeledSample
from glyphcluster.errors import InvalidInputError
from glyphcluster.features.extractor import FeatureVector, extract, feature_names
from glyphcluster.options import PreprocessOptions
from glyphcluster.preprocess.image import CharMatrix, load_char_matrix_text, load_gray_image
from glyphcluster.preprocess.normalize import image_to_matrix

MATRIX_TEXT_SUFFIX = ".txt"


def prepare_matrix(path, options: Optional[PreprocessOptions] = None) -> CharMatrix:
    """Character matrix of an image file; `.txt` fixtures are already normalized."""
    if Path(path).suffix.lower() == MATRIX_TEXT_SUFFIX:
        return load_char_matrix_text(path)
    return image_to_matrix(load_gray_image(path), options)


def featurize_path(path, options: Optional[PreprocessOptions] = None) -> FeatureVector:
    return extract(prepare_matrix(path, options))


def _featurize_or_skip(path: str, options: PreprocessOptions) -> Tuple[Optional[np.ndarray], Optional[str]]:
    try:
        return featurize_path(path, options).values, None
    except InvalidInputError as ex:
        return None, str(ex)


@dataclass(eq=False)
class FeatureTable:
    samples: List[LabeledSample]
    vectors: np.ndarray

    @property
    def labels(self) -> List[str]:
        return [sample.label for sample in self.samples]

    def __len__(self) -> int:
        return len(self.samples)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.vectors, columns=feature_names())
        frame.insert(0, "writer_id", [sample.writer_id or "" for sample in self.samples])
        frame.insert(0, "label", self.labels)
        frame.insert(0, "path", [sample.image_path for sample in self.samples])
        return frame


def featurize_samples(
    samples: Sequence[LabeledSample], options: Optional[PreprocessOptions] = None, jobs: int = 1
) -> FeatureTable:
    """Feature vectors of every sample, in input order; undecodable or blank images are skipped."""
    opts = PreprocessOptions() if options is None else options
    results = Parallel(n_jobs=jobs)(delayed(_featurize_or_skip)(sample.image_path, opts) for sample in samples)

    kept, vectors = [], []
    for sample, (vector, error) in zip(samples, results):
        if vector is None:
            logging.warning(f"skipped {sample.image_path}: {error}")
            continue
        kept.append(sample)
        vectors.append(vector)
    logging.info(f"featurized {len(kept)} of {len(samples)} samples")
    table = np.stack(vectors).astype(np.int64) if vectors else np.empty((0, FEATURE_DIM), dtype=np.int64)
    return FeatureTable(samples=kept, vectors=table)
