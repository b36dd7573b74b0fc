import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from glyphcluster.classifier import Codebook, Model, classify, dump_model, rank_classes, train
from glyphcluster.errors import InvalidArgumentError, InvalidDatasetError
from glyphcluster.options import KMeansOptions


@pytest.fixture
def origin_and_tens():
    return Model(codebooks=[
        Codebook(label="B", centroids=np.full((1, 256), 10.0), k=1, training_count=1),
        Codebook(label="A", centroids=np.zeros((1, 256)), k=1, training_count=1),
    ])


def _clustered_vectors(seed=0):
    rng = np.random.default_rng(seed)
    vectors, labels = [], []
    for label, center in (("0", 0.0), ("1", 8.0), ("2", 16.0)):
        vectors.append(center + rng.integers(0, 3, size=(12, 256)))
        labels += [label] * 12
    return np.concatenate(vectors), labels


def test_model_codebooks_sorted(origin_and_tens):
    assert origin_and_tens.labels == ["A", "B"]
    assert origin_and_tens.codebook("B").centroids[0, 0] == 10.0


def test_exact_distances(origin_and_tens):
    ranked = classify(origin_and_tens, np.zeros(256), t=2)
    assert ranked.labels() == ["A", "B"]
    assert ranked.choices[0].distance == 0.0
    assert ranked.choices[1].distance == pytest.approx(math.sqrt(256 * 100))


def test_tie_goes_to_first_label(origin_and_tens):
    ranked = classify(origin_and_tens, np.full(256, 5.0), t=2)
    assert ranked.labels() == ["A", "B"]
    assert ranked.choices[0].distance == ranked.choices[1].distance


def test_depth_capped_by_class_count(origin_and_tens):
    ranked = classify(origin_and_tens, np.full(256, 9.0), t=5)
    assert sorted(ranked.labels()) == ["A", "B"]
    assert ranked.labels()[0] == "B"


def test_one_sample_per_class():
    vectors = np.stack([np.zeros(256), np.ones(256)])
    model = train(vectors, ["x", "y"], KMeansOptions(k=64))
    assert model.labels == ["x", "y"]
    for codebook, vector in zip(model.codebooks, vectors):
        assert codebook.centroids.shape == (1, 256)
        assert np.array_equal(codebook.centroids[0], vector)
        assert codebook.k == 64
        assert codebook.training_count == 1


def test_trained_model_ranks_training_classes():
    vectors, labels = _clustered_vectors()
    model = train(vectors, labels, KMeansOptions(k=4, seed=2), category="digits")
    for choices, label in zip(rank_classes(model, vectors, 3), labels):
        assert choices.labels()[0] == label
        assert len(choices) == 3


def test_training_is_deterministic_and_parallel_safe():
    vectors, labels = _clustered_vectors(seed=4)
    options = KMeansOptions(k=3, seed=5)
    serial = dump_model(train(vectors, labels, options, jobs=1))
    assert dump_model(train(vectors, labels, options, jobs=1)) == serial
    assert dump_model(train(vectors, labels, options, jobs=2)) == serial


@pytest.mark.parametrize("jobs", [1, 2])
def test_training_summary_logged_per_class(caplog, jobs):
    vectors, labels = _clustered_vectors(seed=6)
    with caplog.at_level(logging.INFO):
        train(vectors, labels, KMeansOptions(k=2, seed=1), jobs=jobs)
    summaries = [record.getMessage() for record in caplog.records if record.getMessage().startswith("class ")]
    assert [summary.split(":")[0] for summary in summaries] == ["class 0", "class 1", "class 2"]
    assert all("12 samples, 2 centroids" in summary for summary in summaries)


def test_missing_class():
    with pytest.raises(InvalidDatasetError, match="'7'"):
        train(np.zeros((2, 256)), ["1", "2"], KMeansOptions(k=1), classes=["1", "2", "7"])


def test_labels_count_mismatch():
    with pytest.raises(InvalidArgumentError):
        train(np.zeros((2, 256)), ["1"], KMeansOptions(k=1))


def test_duplicate_labels():
    codebook = Codebook(label="A", centroids=np.zeros((1, 256)), k=1, training_count=1)
    with pytest.raises(InvalidArgumentError):
        Model(codebooks=[codebook, codebook])


def test_rank_depth_invalid(origin_and_tens):
    with pytest.raises(InvalidArgumentError):
        rank_classes(origin_and_tens, np.zeros(256), 0)


@given(st.lists(st.floats(-50.0, 50.0, allow_nan=False), min_size=256, max_size=256), st.integers(1, 4))
@settings(max_examples=100, deadline=None)
def test_ranking_is_sorted_and_distinct(values, t):
    model = Model(codebooks=[
        Codebook(label=label, centroids=np.full((2, 256), offset) + np.eye(2, 256), k=2, training_count=2)
        for label, offset in (("d", -5.0), ("a", 0.0), ("c", 5.0), ("b", 10.0))
    ])
    ranked = classify(model, np.array(values), t=t)
    distances = [choice.distance for choice in ranked.choices]
    assert len(ranked) == t
    assert len(set(ranked.labels())) == t
    assert distances == sorted(distances)
