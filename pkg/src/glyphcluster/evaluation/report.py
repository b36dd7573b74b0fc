#!/usr/bin/env python
# coding: utf-8
import logging
from typing import Dict, Iterable, List, Sequence

from dataclasses import dataclass, field
from sklearn import metrics

from glyphcluster.classifier.codebook import Model, rank_classes
from glyphcluster.errors import InvalidArgumentError, InvalidDatasetError

DEFAULT_DEPTHS = (1, 2, 3)


@dataclass
class ConfusionMatrix:
    # rows: true label, columns: first-choice prediction, both in `labels` order
    labels: List[str]
    values: List[List[int]]


@dataclass
class AccuracyReport:
    """Top-t choice accuracies of a model on a test set, percentages in [0, 100]."""
    category: str
    n_test: int
    acc_at: Dict[int, float]
    per_class_acc: Dict[str, float]
    confusion: ConfusionMatrix
    per_class_count: Dict[str, int] = field(default_factory=dict)

    def as_dict(self):
        return {
            "category": self.category,
            "n_test": self.n_test,
            "acc_at": {str(depth): value for depth, value in self.acc_at.items()},
            "per_class_acc": dict(self.per_class_acc),
            "per_class_count": dict(self.per_class_count),
            "confusion": {"labels": list(self.confusion.labels), "values": self.confusion.values},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AccuracyReport":
        return cls(
            category=data["category"],
            n_test=int(data["n_test"]),
            acc_at={int(depth): float(value) for depth, value in data["acc_at"].items()},
            per_class_acc={label: float(value) for label, value in data["per_class_acc"].items()},
            confusion=ConfusionMatrix(
                labels=list(data["confusion"]["labels"]),
                values=[[int(count) for count in row] for row in data["confusion"]["values"]],
            ),
            per_class_count={label: int(count) for label, count in data.get("per_class_count", {}).items()},
        )


def _percent(hits: int, total: int) -> float:
    return 100.0 * hits / total


def evaluate(
    model: Model,
    vectors,
    labels: Sequence[str],
    depths: Iterable[int] = DEFAULT_DEPTHS,
    category: str = None,
) -> AccuracyReport:
    """Accuracy of the model when the true class is among the first t choices, for every t in depths."""
    depths = sorted(set(depths))
    if not depths or depths[0] < 1:
        raise InvalidArgumentError(f"choice depths should be >= 1, got {depths}")
    labels = [str(label) for label in labels]
    if not labels:
        raise InvalidDatasetError("test set is empty")
    known = set(model.labels)
    unknown = sorted(set(labels) - known)
    if unknown:
        raise InvalidDatasetError(f"test labels unknown to the model: {unknown}")

    ranked = rank_classes(model, vectors, depths[-1])
    if len(ranked) != len(labels):
        raise InvalidArgumentError(f"{len(ranked)} vectors but {len(labels)} labels")

    n_test = len(labels)
    acc_at = {}
    for depth in depths:
        hits = sum(1 for truth, choices in zip(labels, ranked) if truth in choices.labels()[:depth])
        acc_at[depth] = _percent(hits, n_test)

    predicted = [choices.choices[0].label for choices in ranked]
    confusion = metrics.confusion_matrix(labels, predicted, labels=model.labels)
    per_class_count = {}
    per_class_acc = {}
    for idx, label in enumerate(model.labels):
        count = int(confusion[idx].sum())
        if count:
            per_class_count[label] = count
            per_class_acc[label] = _percent(int(confusion[idx, idx]), count)

    report = AccuracyReport(
        category=model.category if category is None else category,
        n_test=n_test,
        acc_at=acc_at,
        per_class_acc=per_class_acc,
        confusion=ConfusionMatrix(labels=model.labels, values=confusion.tolist()),
        per_class_count=per_class_count,
    )
    logging.info(
        f"evaluated {n_test} samples: "
        + ", ".join(f"top-{depth} {value:.2f}%" for depth, value in acc_at.items())
    )
    return report
