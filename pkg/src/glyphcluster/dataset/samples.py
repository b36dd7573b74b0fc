#!/usr/bin/env python
# coding: utf-8
import logging
import os
import re
import string
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from dataclasses import dataclass

from glyphcluster.errors import EmptyDatasetError, InvalidDatasetError

IMAGE_SUFFIXES = (".png", ".bmp", ".txt")

# optional partition prefix, then the form id: "HSF_3_F1042_07.png", "F0012_07.png"
_FILENAME_PATTERN = re.compile(r"^(?:(?P<partition>HSF_\d+)[_-])?(?P<writer>F\d{4})(?!\d)", re.IGNORECASE)

ALPHABETS: Dict[str, Optional[str]] = {
    "digits": string.digits,
    "uppercase": string.ascii_uppercase,
    "lowercase": string.ascii_lowercase,
    "custom": None,
}


@dataclass(frozen=True)
class LabeledSample:
    image_path: str
    label: str
    writer_id: Optional[str] = None
    partition: Optional[str] = None

    @property
    def writer_number(self) -> Optional[int]:
        return None if self.writer_id is None else int(self.writer_id[1:])


def parse_filename(filename: str) -> Dict[str, Optional[str]]:
    """Writer id (`F####`) and partition (`HSF_#`) carried by a file name, when present."""
    match = _FILENAME_PATTERN.match(filename)
    if match is None:
        return {"writer_id": None, "partition": None}
    partition = match.group("partition")
    return {
        "writer_id": match.group("writer").upper(),
        "partition": None if partition is None else partition.upper(),
    }


def _is_readable(path: Path) -> bool:
    try:
        return path.stat().st_size > 0 and os.access(path, os.R_OK)
    except OSError:
        return False


def scan_dataset(root) -> List[LabeledSample]:
    """Collect `root/<label>/<image>` files, ordered by path.

    Unreadable or empty files are skipped with a warning.
    """
    root_path = Path(root)
    if not root_path.is_dir():
        raise EmptyDatasetError(f"dataset root {root} is not a directory")

    samples = []
    skipped = 0
    for label_dir in sorted(path for path in root_path.iterdir() if path.is_dir()):
        for path in sorted(label_dir.iterdir()):
            if not path.is_file() or path.suffix.lower() not in IMAGE_SUFFIXES:
                continue
            if not _is_readable(path):
                skipped += 1
                continue
            samples.append(LabeledSample(image_path=str(path), label=label_dir.name, **parse_filename(path.name)))

    if skipped:
        logging.warning(f"skipped {skipped} unreadable files under {root}")
    if not samples:
        raise EmptyDatasetError(f"no images found under {root}")
    logging.info(f"dataset scanned: {len(samples)} samples, {len({sample.label for sample in samples})} labels")
    return samples


def check_labels(samples: Sequence[LabeledSample], category: str) -> None:
    if category not in ALPHABETS:
        raise InvalidDatasetError(f"unknown category {category!r}")
    alphabet = ALPHABETS[category]
    for sample in samples:
        if not sample.label:
            raise InvalidDatasetError(f"sample {sample.image_path} has an empty label")
        if alphabet is not None and sample.label not in set(alphabet):
            raise InvalidDatasetError(f"label {sample.label!r} of {sample.image_path} is not a {category} symbol")


def category_classes(category: str) -> Optional[List[str]]:
    """Labels a model for the category must cover, None when open-ended."""
    alphabet = ALPHABETS.get(category)
    return None if alphabet is None else list(alphabet)
