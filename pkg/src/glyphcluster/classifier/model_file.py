#!/usr/bin/env python
# coding: utf-8
"""Binary model file.

All integers and floats are little-endian::

    magic          10 bytes  b"GLYPHMODEL"
    format         u16       MODEL_FORMAT_VERSION
    layout         u16       feature layout version of the vectors the model was trained on
    dimension      u16       256
    category       u16 length + UTF-8 bytes
    seed           i64
    classes        u32
    per class:
      label        u16 length + UTF-8 bytes
      k            u32
      training     u32       samples the codebook was fit on
      centroids    u32       count c
      values       c * dimension f64
    checksum       u32       CRC-32 of every preceding byte
"""
import logging
import struct
import zlib
from typing import Tuple

import numpy as np

from glyphcluster._config import FEATURE_DIM, FEATURE_LAYOUT_VERSION, MODEL_FORMAT_VERSION, MODEL_MAGIC
from glyphcluster.classifier.codebook import Codebook, Model
from glyphcluster.errors import CorruptModelError, DimensionMismatchError, GlyphError, ModelVersionError

_HEADER = struct.Struct("<HHH")
_CHECKSUM = struct.Struct("<I")


def _pack_text(text: str) -> bytes:
    encoded = text.encode("utf-8")
    return struct.pack("<H", len(encoded)) + encoded


def dump_model(model: Model) -> bytes:
    chunks = [
        MODEL_MAGIC,
        _HEADER.pack(MODEL_FORMAT_VERSION, model.feature_layout_version, FEATURE_DIM),
        _pack_text(model.category),
        struct.pack("<qI", model.seed, len(model.codebooks)),
    ]
    for codebook in model.codebooks:
        chunks.append(_pack_text(codebook.label))
        chunks.append(struct.pack("<III", codebook.k, codebook.training_count, codebook.centroids.shape[0]))
        chunks.append(np.ascontiguousarray(codebook.centroids, dtype="<f8").tobytes())
    payload = b"".join(chunks)
    return payload + _CHECKSUM.pack(zlib.crc32(payload))


def save_model(model: Model, path) -> None:
    with open(path, "wb") as f_model:
        f_model.write(dump_model(model))
    logging.info(f"model saved: {path} ({len(model.codebooks)} classes)")


class _Reader:
    def __init__(self, data: bytes, offset: int):
        self.data = data
        self.offset = offset

    def take(self, size: int) -> bytes:
        if self.offset + size > len(self.data):
            raise CorruptModelError("model file is truncated")
        chunk = self.data[self.offset:self.offset + size]
        self.offset += size
        return chunk

    def unpack(self, fmt: str) -> Tuple:
        return struct.unpack(fmt, self.take(struct.calcsize(fmt)))

    def text(self) -> str:
        (length,) = self.unpack("<H")
        try:
            return self.take(length).decode("utf-8")
        except UnicodeDecodeError as ex:
            raise CorruptModelError("model file has an undecodable string") from ex


def parse_model(data: bytes) -> Model:
    if len(data) < len(MODEL_MAGIC) + _HEADER.size or not data.startswith(MODEL_MAGIC):
        raise CorruptModelError("not a glyphcluster model file")
    reader = _Reader(data, len(MODEL_MAGIC))
    format_version, layout_version, dimension = reader.unpack(_HEADER.format)
    if format_version != MODEL_FORMAT_VERSION:
        raise ModelVersionError(f"model format version {format_version}, expected {MODEL_FORMAT_VERSION}")
    if layout_version != FEATURE_LAYOUT_VERSION:
        raise ModelVersionError(f"feature layout version {layout_version}, expected {FEATURE_LAYOUT_VERSION}")
    if dimension != FEATURE_DIM:
        raise DimensionMismatchError(f"model dimension {dimension}, expected {FEATURE_DIM}")

    category = reader.text()
    seed, class_count = reader.unpack("<qI")
    codebooks = []
    for _ in range(class_count):
        label = reader.text()
        k, training_count, centroid_count = reader.unpack("<III")
        values = np.frombuffer(reader.take(centroid_count * dimension * 8), dtype="<f8")
        codebooks.append((label, values.reshape(centroid_count, dimension).astype(np.float64), k, training_count))

    (checksum,) = reader.unpack(_CHECKSUM.format)
    if reader.offset != len(data):
        raise CorruptModelError("model file has trailing bytes")
    if checksum != zlib.crc32(data[:-_CHECKSUM.size]):
        raise CorruptModelError("model file checksum mismatch")
    try:
        return Model(
            codebooks=[Codebook(label=label, centroids=centroids, k=k, training_count=count)
                       for label, centroids, k, count in codebooks],
            category=category,
            seed=seed,
            feature_layout_version=layout_version,
        )
    except GlyphError as ex:
        raise CorruptModelError(f"model file content is invalid: {ex}") from ex


def load_model(path) -> Model:
    with open(path, "rb") as f_model:
        data = f_model.read()
    model = parse_model(data)
    logging.info(f"model loaded: {path} ({len(model.codebooks)} classes, category {model.category})")
    return model
