#!/usr/bin/env python
# coding: utf-8
"""Train/test split manifests.

A manifest is a YAML document::

    category: digits              # digits | uppercase | lowercase | custom
    train:
      writers: [F0000-F0099]       # inclusive ranges, or single ids such as F0042
      partitions: [HSF_0]          # optional, empty means any partition
    test: all                      # "all" selects every sample, writer id or not
"""
import logging
import re
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import yaml
from dataclasses import dataclass, field

from glyphcluster.dataset.samples import ALPHABETS, LabeledSample, check_labels
from glyphcluster.errors import InvalidManifestError

_RANGE_PATTERN = re.compile(r"^F(\d{4})(?:\s*-\s*F(\d{4}))?$", re.IGNORECASE)


@dataclass(frozen=True)
class WriterRange:
    start: int
    end: int

    def __contains__(self, writer: int) -> bool:
        return self.start <= writer <= self.end

    def overlaps(self, other: "WriterRange") -> bool:
        return self.start <= other.end and other.start <= self.end

    def __str__(self) -> str:
        return f"F{self.start:04d}-F{self.end:04d}"


@dataclass
class Selector:
    writers: List[WriterRange] = field(default_factory=list)
    partitions: List[str] = field(default_factory=list)
    select_all: bool = False

    def is_empty(self) -> bool:
        return not self.select_all and not self.writers

    def matches(self, sample: LabeledSample) -> bool:
        if self.select_all:
            return True
        writer = sample.writer_number
        if writer is None or not any(writer in writers for writers in self.writers):
            return False
        return not self.partitions or sample.partition is None or sample.partition in self.partitions

    def as_dict(self):
        if self.select_all:
            return "all"
        return {"writers": [str(writers) for writers in self.writers], "partitions": list(self.partitions)}


@dataclass
class SplitManifest:
    category: str
    train: Selector
    test: Selector
    name: Optional[str] = None

    def validate(self) -> None:
        if self.category not in ALPHABETS:
            raise InvalidManifestError(f"unknown category {self.category!r}")
        if self.train.is_empty() or self.test.is_empty():
            return
        if self.train.select_all or self.test.select_all:
            raise InvalidManifestError("train and test selectors overlap: one of them selects all samples")
        for train_range in self.train.writers:
            for test_range in self.test.writers:
                if train_range.overlaps(test_range):
                    raise InvalidManifestError(f"train writers {train_range} overlap test writers {test_range}")

    def as_dict(self):
        return {"category": self.category, "train": self.train.as_dict(), "test": self.test.as_dict()}


BUILTIN_MANIFESTS = {
    "nist-digits": SplitManifest(
        category="digits",
        train=Selector(writers=[WriterRange(0, 99)], partitions=["HSF_0"]),
        test=Selector(writers=[WriterRange(100, 149)], partitions=["HSF_0"]),
        name="nist-digits",
    ),
    "nist-uppercase": SplitManifest(
        category="uppercase",
        train=Selector(writers=[WriterRange(0, 999)], partitions=["HSF_0", "HSF_1"]),
        test=Selector(writers=[WriterRange(1000, 1499)], partitions=["HSF_3"]),
        name="nist-uppercase",
    ),
    "nist-lowercase": SplitManifest(
        category="lowercase",
        train=Selector(writers=[WriterRange(0, 999)], partitions=["HSF_0", "HSF_1"]),
        test=Selector(writers=[WriterRange(1000, 1499)], partitions=["HSF_3"]),
        name="nist-lowercase",
    ),
}


def _parse_range(raw) -> WriterRange:
    match = _RANGE_PATTERN.match(str(raw).strip())
    if match is None:
        raise InvalidManifestError(f"bad writer range {raw!r}, expected F#### or F####-F####")
    start = int(match.group(1))
    end = start if match.group(2) is None else int(match.group(2))
    if end < start:
        raise InvalidManifestError(f"writer range {raw!r} is reversed")
    return WriterRange(start, end)


def _parse_selector(raw, side: str) -> Selector:
    if raw is None:
        return Selector()
    if isinstance(raw, str):
        if raw.strip().lower() == "all":
            return Selector(select_all=True)
        raise InvalidManifestError(f"{side} selector should be 'all' or a mapping, got {raw!r}")
    if not isinstance(raw, dict):
        raise InvalidManifestError(f"{side} selector should be a mapping")
    unknown = set(raw) - {"writers", "partitions"}
    if unknown:
        raise InvalidManifestError(f"{side} selector has unknown keys {sorted(unknown)}")
    writers = raw.get("writers") or []
    partitions = raw.get("partitions") or []
    if not isinstance(writers, list) or not isinstance(partitions, list):
        raise InvalidManifestError(f"{side} writers and partitions should be lists")
    return Selector(writers=[_parse_range(item) for item in writers],
                    partitions=[str(item).upper() for item in partitions])


def parse_manifest(text: str, name: Optional[str] = None) -> SplitManifest:
    try:
        raw = yaml.load(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError as ex:
        raise InvalidManifestError(f"manifest is not valid YAML: {ex}") from ex
    if not isinstance(raw, dict) or "category" not in raw:
        raise InvalidManifestError("manifest should be a mapping with a 'category' key")
    manifest = SplitManifest(
        category=str(raw["category"]),
        train=_parse_selector(raw.get("train"), "train"),
        test=_parse_selector(raw.get("test"), "test"),
        name=name,
    )
    manifest.validate()
    return manifest


def load_manifest(name_or_path: str) -> SplitManifest:
    """Built-in manifest by name, otherwise a YAML manifest file."""
    if name_or_path in BUILTIN_MANIFESTS:
        return BUILTIN_MANIFESTS[name_or_path]
    path = Path(name_or_path)
    if not path.is_file():
        raise InvalidManifestError(
            f"unknown manifest {name_or_path!r}: not a built-in ({', '.join(BUILTIN_MANIFESTS)}) nor a file"
        )
    with open(path, encoding="utf-8") as f_manifest:
        return parse_manifest(f_manifest.read(), name=path.stem)


def apply_split(
    samples: Sequence[LabeledSample], manifest: SplitManifest
) -> Tuple[List[LabeledSample], List[LabeledSample]]:
    """Partition samples into (train, test); samples matching neither side are dropped."""
    manifest.validate()
    train, test = [], []
    excluded = 0
    for sample in samples:
        if manifest.train.matches(sample):
            train.append(sample)
        elif manifest.test.matches(sample):
            test.append(sample)
        else:
            excluded += 1
    check_labels(train + test, manifest.category)
    logging.info(f"split {manifest.name or manifest.category}: {len(train)} train, {len(test)} test, {excluded} excluded")
    return train, test
