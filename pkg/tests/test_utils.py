import json

import numpy as np
import pytest

from glyphcluster.classifier import Choice
from glyphcluster.options import KMeansOptions
from glyphcluster.utils import ReportEncoder


@pytest.mark.parametrize(
    "test_object, expected_json",
    (
        (
            [_type(42) for _type in (np.intc, np.intp, np.int8, np.int16, np.int32, np.int64, np.uint8, np.uint64)],
            "[42, 42, 42, 42, 42, 42, 42, 42]",
        ),
        (
            [_type(0.5) for _type in (np.float16, np.float32, np.float64)],
            "[0.5, 0.5, 0.5]",
        ),
        ([np.bool_(1), np.bool_(0)], "[true, false]"),
        (np.empty((0, 0)), "[]"),
        (np.array([[0, 1], [2, 3]], dtype=np.int64), "[[0, 1], [2, 3]]"),
        (np.ones((2, 3)), "[[1.0, 1.0, 1.0], [1.0, 1.0, 1.0]]"),
        # objects exposing as_dict
        (KMeansOptions(k=2), '{"k": 2, "seed": 1, "max_iter": 300, "tol": 1e-06}'),
        # python types
        (
            [321123321123, 0.56, True, False, None, "test", {1: 4}],
            '[321123321123, 0.56, true, false, null, "test", {"1": 4}]',
        ),
    ),
)
def test_report_encoder_compatible_types(test_object, expected_json: str) -> None:
    assert json.dumps(test_object, cls=ReportEncoder) == expected_json, test_object


@pytest.mark.parametrize(
    "test_object",
    ({1, 2, 3}, Choice(label="A", distance=0.0)),
)
def test_report_encoder_incompatible_types(test_object) -> None:
    with pytest.raises(TypeError):
        json.dumps(test_object, cls=ReportEncoder)
