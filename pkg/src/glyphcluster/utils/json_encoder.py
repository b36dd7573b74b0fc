import json

import numpy as np

_TYPES_MAPPING = (
    ((np.integer,), int),
    ((np.floating,), float),
    ((np.bool_,), bool),
    ((np.ndarray,), lambda obj: obj.tolist()),
)


class ReportEncoder(json.JSONEncoder):
    """JSON encoder for numpy values and objects exposing `as_dict()`"""

    def default(self, obj):
        """Called by `json` for objects it cannot serialize itself.

        Unknown types keep the default `JSONEncoder` behaviour - a TypeError.
        """
        for types_list, python_type in _TYPES_MAPPING:
            if isinstance(obj, types_list):
                return python_type(obj)
        as_dict = getattr(obj, "as_dict", None)
        if callable(as_dict):
            return as_dict()

        return json.JSONEncoder.default(self, obj)
