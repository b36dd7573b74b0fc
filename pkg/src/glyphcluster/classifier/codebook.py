#!/usr/bin/env python
# coding: utf-8
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from dataclasses import dataclass, field
from joblib import Parallel, delayed
from scipy.spatial.distance import cdist

from glyphcluster._config import FEATURE_DIM, FEATURE_LAYOUT_VERSION
from glyphcluster.classifier.kmeans import KMeansResult, kmeans_fit
from glyphcluster.errors import InvalidArgumentError, InvalidDatasetError
from glyphcluster.features.extractor import FeatureVector
from glyphcluster.options import KMeansOptions

CATEGORIES = ("digits", "uppercase", "lowercase", "custom")

# test vectors ranked per distance table
_RANK_CHUNK = 1024


@dataclass(eq=False)
class Codebook:
    label: str
    centroids: np.ndarray
    k: int
    training_count: int

    def __post_init__(self):
        centroids = np.asarray(self.centroids, dtype=np.float64)
        if centroids.ndim != 2 or centroids.shape[1] != FEATURE_DIM:
            raise InvalidArgumentError(f"codebook {self.label!r}: centroids should have shape (c, {FEATURE_DIM})")
        if not 1 <= centroids.shape[0] <= max(1, min(self.k, self.training_count)):
            raise InvalidArgumentError(
                f"codebook {self.label!r}: {centroids.shape[0]} centroids for k={self.k}, "
                f"{self.training_count} training samples"
            )
        self.centroids = centroids

    def __eq__(self, other):
        if not isinstance(other, Codebook):
            return NotImplemented
        return (
            self.label == other.label
            and self.k == other.k
            and self.training_count == other.training_count
            and self.centroids.shape == other.centroids.shape
            and bool(np.array_equal(self.centroids, other.centroids))
        )


@dataclass
class Model:
    codebooks: List[Codebook]
    category: str = "custom"
    seed: int = 1
    feature_layout_version: int = FEATURE_LAYOUT_VERSION

    def __post_init__(self):
        labels = [codebook.label for codebook in self.codebooks]
        if len(set(labels)) != len(labels):
            raise InvalidArgumentError("model class labels should be unique")
        if self.category not in CATEGORIES:
            raise InvalidArgumentError(f"unknown category {self.category!r}, expected one of {CATEGORIES}")
        # ranking relies on codebooks being in label order
        self.codebooks = sorted(self.codebooks, key=lambda codebook: codebook.label)

    @property
    def labels(self) -> List[str]:
        return [codebook.label for codebook in self.codebooks]

    def codebook(self, label: str) -> Codebook:
        for codebook in self.codebooks:
            if codebook.label == label:
                return codebook
        raise KeyError(label)


@dataclass
class Choice:
    label: str
    distance: float


@dataclass
class RankedChoices:
    choices: List[Choice] = field(default_factory=list)

    def labels(self) -> List[str]:
        return [choice.label for choice in self.choices]

    def __len__(self) -> int:
        return len(self.choices)


def _as_matrix(vectors) -> np.ndarray:
    if isinstance(vectors, FeatureVector):
        vectors = [vectors]
    if not isinstance(vectors, np.ndarray):
        vectors = [vector.values if isinstance(vector, FeatureVector) else vector for vector in vectors]
    data = np.asarray(vectors, dtype=np.float64)
    if data.ndim == 1:
        data = data[None]
    if data.ndim != 2 or data.shape[1] != FEATURE_DIM:
        raise InvalidArgumentError(f"feature vectors should have {FEATURE_DIM} values, got shape {data.shape}")
    return data


def _fit_codebook(label: str, vectors: np.ndarray, options: KMeansOptions) -> Tuple[Codebook, KMeansResult]:
    result = kmeans_fit(vectors, options.k, seed=options.seed, max_iter=options.max_iter, tol=options.tol)
    codebook = Codebook(label=label, centroids=result.centroids, k=options.k, training_count=vectors.shape[0])
    return codebook, result


def _log_fit(codebook: Codebook, result: KMeansResult) -> None:
    logging.info(
        f"class {codebook.label}: {codebook.training_count} samples, {result.centroids.shape[0]} centroids, "
        f"{result.n_iter} iterations, converged={result.converged}, reduced={result.reduced}"
    )


def train(
    vectors,
    labels: Sequence[str],
    options: Optional[KMeansOptions] = None,
    category: str = "custom",
    classes: Optional[Sequence[str]] = None,
    jobs: int = 1,
) -> Model:
    """Fit one k-means codebook per class.

    `classes` lists the labels the model must cover; a listed class without samples is an error.
    Codebooks are fit independently, in parallel when `jobs` > 1, and gathered in label order.
    """
    opts = KMeansOptions() if options is None else options
    opts.validate()
    data = _as_matrix(vectors)
    labels = [str(label) for label in labels]
    if data.shape[0] != len(labels):
        raise InvalidArgumentError(f"{data.shape[0]} vectors but {len(labels)} labels")

    by_class: Dict[str, List[int]] = {}
    for idx, label in enumerate(labels):
        by_class.setdefault(label, []).append(idx)
    for label in classes or []:
        if label not in by_class:
            raise InvalidDatasetError(f"class {label!r} has no training samples")
    if not by_class:
        raise InvalidDatasetError("no training samples")

    ordered = sorted(by_class)
    fits = Parallel(n_jobs=jobs)(
        delayed(_fit_codebook)(label, data[by_class[label]], opts) for label in ordered
    )
    # worker processes have no logging setup
    for codebook, result in fits:
        _log_fit(codebook, result)
    return Model(codebooks=[codebook for codebook, _ in fits], category=category, seed=opts.seed)


def rank_classes(model: Model, vectors, t: int) -> List[RankedChoices]:
    """Top-t classes per vector by nearest-centroid distance, ties in label order."""
    if t < 1:
        raise InvalidArgumentError(f"t should be >= 1, got {t}")
    if not model.codebooks:
        raise InvalidArgumentError("model has no classes")
    data = _as_matrix(vectors)
    centroids = np.concatenate([codebook.centroids for codebook in model.codebooks])
    offsets = np.cumsum([0] + [codebook.centroids.shape[0] for codebook in model.codebooks[:-1]])
    labels = model.labels
    depth = min(t, len(labels))

    ranked = []
    for start in range(0, data.shape[0], _RANK_CHUNK):
        distances = cdist(data[start:start + _RANK_CHUNK], centroids, metric="euclidean")
        scores = np.minimum.reduceat(distances, offsets, axis=1)
        # stable sort over label-ordered columns breaks ties lexicographically
        order = np.argsort(scores, axis=1, kind="stable")[:, :depth]
        for row, columns in enumerate(order):
            ranked.append(RankedChoices([Choice(labels[col], float(scores[row, col])) for col in columns]))
    return ranked


def classify(model: Model, vector, t: int = 3) -> RankedChoices:
    return rank_classes(model, vector, t)[0]
