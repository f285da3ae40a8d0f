# this_file: src/cyclab/serialization/json_handler.py
"""Centralized JSON handling with orjson support."""

import json
from pathlib import Path
from typing import Any, cast

try:
    import orjson

    HAS_ORJSON = True
except ImportError:
    HAS_ORJSON = False

from loguru import logger

from .json_encoder import CyclabJSONEncoder, to_native


def load_json_file(file_path: str | Path) -> dict[str, Any]:
    """Load a JSON document, with orjson when available."""
    path = Path(file_path)
    if HAS_ORJSON:
        return cast(dict[str, Any], orjson.loads(path.read_bytes()))
    with open(path, encoding="utf-8") as f:
        return cast(dict[str, Any], json.load(f))


def save_json_file(data: Any, file_path: str | Path, indent: int = 2) -> None:
    """Write ``data`` as JSON, converting numerical values first.

    Args:
        data: Mapping, report object or any value accepted by :func:`to_native`
        file_path: Destination; parent directories are created
        indent: 2 for pretty output, 0 for compact output
    """
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    native = to_native(data)
    if HAS_ORJSON:
        options = orjson.OPT_INDENT_2 if indent == 2 else 0
        path.write_bytes(orjson.dumps(native, option=options | orjson.OPT_SORT_KEYS))
    else:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(native, f, indent=indent or None, sort_keys=True, separators=(",", ": "))
    logger.debug(f"Wrote {path}")


def dumps_json(data: Any, indent: int = 2) -> str:
    """Serialize ``data`` to a JSON string with sorted keys."""
    native = to_native(data)
    if HAS_ORJSON and indent in (0, 2):
        options = orjson.OPT_SORT_KEYS | (orjson.OPT_INDENT_2 if indent == 2 else 0)
        return orjson.dumps(native, option=options).decode("utf-8")
    return json.dumps(native, indent=indent or None, sort_keys=True, cls=CyclabJSONEncoder)


def loads_json(json_str: str | bytes) -> dict[str, Any]:
    if HAS_ORJSON:
        return cast(dict[str, Any], orjson.loads(json_str))
    return cast(dict[str, Any], json.loads(json_str))


def canonical_bytes(data: Any) -> bytes:
    """Compact JSON with sorted keys, used for hashing manifests."""
    native = to_native(data)
    if HAS_ORJSON:
        return orjson.dumps(native, option=orjson.OPT_SORT_KEYS)
    return json.dumps(native, sort_keys=True, separators=(",", ":")).encode("utf-8")
