#!/usr/bin/env python
# coding: utf-8
from typing import List

import numpy as np
from dataclasses import dataclass, field
from scipy.spatial.distance import cdist

from glyphcluster.errors import InvalidArgumentError
from glyphcluster.options import KMeansOptions


@dataclass(eq=False)
class KMeansResult:
    centroids: np.ndarray
    # index of the assigned centroid for every input row
    labels: np.ndarray
    k_requested: int
    n_iter: int = 0
    converged: bool = True
    # fewer centroids than requested because the input has fewer distinct points
    reduced: bool = False
    inertia_history: List[float] = field(default_factory=list)

    @property
    def inertia(self) -> float:
        return self.inertia_history[-1] if self.inertia_history else 0.0


def _squared_distances(vectors: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    return cdist(vectors, centroids, metric="sqeuclidean")


def kmeans_plusplus(vectors: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    """k-means++ seeding: each next center drawn with probability proportional to squared distance."""
    n_samples = vectors.shape[0]
    centroids = np.empty((k, vectors.shape[1]), dtype=np.float64)
    centroids[0] = vectors[rng.integers(0, n_samples)]
    closest = _squared_distances(vectors, centroids[:1])[:, 0]
    for idx in range(1, k):
        total = closest.sum()
        if total <= 0:
            # every point already coincides with a center
            next_idx = int(rng.integers(0, n_samples))
        else:
            next_idx = int(rng.choice(n_samples, p=closest / total))
        centroids[idx] = vectors[next_idx]
        closest = np.minimum(closest, _squared_distances(vectors, centroids[idx:idx + 1])[:, 0])
    return centroids


def _update_centroids(vectors: np.ndarray, labels: np.ndarray, distances: np.ndarray, centroids: np.ndarray):
    """Means of the current clusters; empty clusters move to the point farthest from its centroid."""
    updated = np.empty_like(centroids)
    sizes = np.bincount(labels, minlength=centroids.shape[0])
    for cluster in np.flatnonzero(sizes):
        # boolean selection keeps sample order
        updated[cluster] = vectors[labels == cluster].mean(axis=0)
    empty = np.flatnonzero(sizes == 0).tolist()
    if empty:
        remaining = distances.copy()
        for cluster in empty:
            farthest = int(np.argmax(remaining))
            updated[cluster] = vectors[farthest]
            remaining[farthest] = -1.0
    return updated


def kmeans_fit(vectors, k: int, seed: int = 1, max_iter: int = 300, tol: float = 1e-6) -> KMeansResult:
    """Lloyd's algorithm with k-means++ seeding.

    Stops once the largest centroid shift is <= tol or after max_iter iterations.
    When k is at least the number of distinct points, the distinct points themselves
    (in lexicographic row order) are returned and no iteration runs.
    """
    KMeansOptions(k=k, seed=seed, max_iter=max_iter, tol=tol).validate()
    data = np.asarray(vectors, dtype=np.float64)
    if data.ndim != 2 or data.shape[0] == 0:
        raise InvalidArgumentError("k-means needs a non-empty 2d array of vectors")

    distinct = np.unique(data, axis=0)
    if k >= distinct.shape[0]:
        labels = np.argmin(_squared_distances(data, distinct), axis=1)
        return KMeansResult(
            centroids=distinct,
            labels=labels,
            k_requested=k,
            reduced=k > distinct.shape[0],
            inertia_history=[0.0],
        )

    rng = np.random.default_rng(seed)
    centroids = kmeans_plusplus(data, k, rng)
    result = KMeansResult(centroids=centroids, labels=np.zeros(data.shape[0], dtype=np.intp), k_requested=k,
                          converged=False)
    for iteration in range(1, max_iter + 1):
        squared = _squared_distances(data, centroids)
        labels = np.argmin(squared, axis=1)
        closest = squared[np.arange(data.shape[0]), labels]
        result.inertia_history.append(float(closest.sum()))

        updated = _update_centroids(data, labels, closest, centroids)
        shift = float(np.sqrt(((updated - centroids) ** 2).sum(axis=1)).max())
        centroids = updated
        result.n_iter = iteration
        if shift <= tol:
            result.converged = True
            break

    squared = _squared_distances(data, centroids)
    result.labels = np.argmin(squared, axis=1)
    result.inertia_history.append(float(squared[np.arange(data.shape[0]), result.labels].sum()))
    result.centroids = centroids
    return result
