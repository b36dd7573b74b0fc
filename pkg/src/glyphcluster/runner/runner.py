import logging
import sys
from typing import List, Optional, TextIO, Union

from dataclasses import dataclass

from glyphcluster.dataset import apply_split, check_labels, load_manifest, scan_dataset
from glyphcluster.dataset.samples import LabeledSample
from glyphcluster.errors import EmptyDatasetError, InvalidArgumentError
from glyphcluster.options import KMeansOptions, PreprocessOptions
from glyphcluster.options.kmeans import DEFAULT_K, DEFAULT_MAX_ITER, DEFAULT_SEED, DEFAULT_TOL
from glyphcluster.pipeline import FeatureTable, featurize_samples

COMMANDS = ("extract", "train", "classify", "evaluate")
DEFAULT_TOP_T = 3


@dataclass
class RunConfig:
    command: str
    dataset_root: Optional[str] = None
    manifest: Optional[str] = None
    model_path: Optional[str] = None
    image_path: Optional[str] = None
    output_path: Optional[str] = None
    k: int = DEFAULT_K
    seed: int = DEFAULT_SEED
    max_iter: int = DEFAULT_MAX_ITER
    tol: float = DEFAULT_TOL
    top_t: int = DEFAULT_TOP_T
    output_format: Optional[str] = None
    threshold_mode: Union[str, int] = "otsu"
    category: Optional[str] = None
    jobs: int = 1

    def kmeans_options(self) -> KMeansOptions:
        return KMeansOptions(k=self.k, seed=self.seed, max_iter=self.max_iter, tol=self.tol)

    def preprocess_options(self) -> PreprocessOptions:
        return PreprocessOptions(threshold=self.threshold_mode)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise InvalidArgumentError(f"unknown command {self.command!r}")
        self.kmeans_options().validate()
        self.preprocess_options().get_fixed_threshold()
        if self.top_t < 1:
            raise InvalidArgumentError(f"top should be >= 1, got {self.top_t}")
        if self.jobs == 0 or self.jobs < -1:
            raise InvalidArgumentError(f"jobs should be >= 1 (or -1 for all cores), got {self.jobs}")


class Runner:
    def __init__(self, config: RunConfig, out: Optional[TextIO] = None):
        config.validate()
        self.config = config
        self.out = sys.stdout if out is None else out

    def _category(self, fallback: str = "custom") -> str:
        if self.config.manifest:
            return load_manifest(self.config.manifest).category
        return self.config.category or fallback

    def _load_samples(self, side: str) -> List[LabeledSample]:
        """Samples of one split side, or every sample when no manifest is given."""
        if not self.config.dataset_root:
            raise InvalidArgumentError(f"{self.config.command} needs --dataset")
        samples = scan_dataset(self.config.dataset_root)
        if self.config.manifest:
            train, test = apply_split(samples, load_manifest(self.config.manifest))
            selected = {"train": train, "test": test}.get(side, train + test)
        else:
            check_labels(samples, self._category())
            selected = samples
        if not selected:
            raise EmptyDatasetError(f"no {side} samples under {self.config.dataset_root}")
        logging.info(f"{side} samples: {len(selected)}")
        return selected

    def _featurize(self, samples: List[LabeledSample]) -> FeatureTable:
        table = featurize_samples(samples, self.config.preprocess_options(), jobs=self.config.jobs)
        if not len(table):
            raise EmptyDatasetError("no sample could be featurized")
        return table

    def run(self) -> None:
        raise NotImplementedError()
