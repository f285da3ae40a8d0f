# this_file: src/cyclab/serialization/json_encoder.py
"""Conversion of numerical results into JSON-native values."""

import json
import math
from collections.abc import Iterator, Mapping
from typing import Any

import numpy as np
from loguru import logger


def to_native(obj: Any) -> Any:
    """Recursively convert complex numbers, numpy values and report objects.

    Complex values become [re, im], numpy scalars and arrays become Python values,
    objects with ``to_dict`` are expanded and non-finite floats become None.
    """
    if obj is None or isinstance(obj, bool | int | str):
        return obj
    if isinstance(obj, float):
        if math.isfinite(obj):
            return obj
        logger.warning(f"Converting non-finite value {obj} to null")
        return None
    if isinstance(obj, complex):
        return [to_native(obj.real), to_native(obj.imag)]
    if isinstance(obj, np.generic):
        return to_native(obj.item())
    if isinstance(obj, np.ndarray):
        return [to_native(item) for item in obj.tolist()]
    if isinstance(obj, Mapping):
        return {str(k): to_native(v) for k, v in obj.items()}
    if isinstance(obj, list | tuple):
        return [to_native(item) for item in obj]
    to_dict = getattr(obj, "to_dict", None)
    if callable(to_dict):
        return to_native(to_dict())
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


class CyclabJSONEncoder(json.JSONEncoder):
    """Stdlib encoder that runs :func:`to_native` before encoding."""

    def encode(self, o: Any) -> str:
        return super().encode(to_native(o))

    def iterencode(self, o: Any, _one_shot: bool = False) -> Iterator[str]:
        return super().iterencode(to_native(o), _one_shot)
