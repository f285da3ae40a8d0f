# this_file: src/cyclab/serialization/__init__.py
"""JSON and CSV serialization of manifests, results and domain types."""

from .codecs import (
    atoms_from_json,
    atoms_to_json,
    complex_from_json,
    complex_to_json,
    function_from_json,
    poly_from_json,
    poly_only_from_json,
    poly_to_json,
    rat_from_json,
    rat_to_json,
    space_from_json,
    space_to_json,
)
from .csv_export import format_cell, read_csv_rows, write_csv
from .json_encoder import CyclabJSONEncoder, to_native
from .json_handler import canonical_bytes, dumps_json, load_json_file, loads_json, save_json_file

__all__ = [
    "CyclabJSONEncoder",
    "atoms_from_json",
    "atoms_to_json",
    "canonical_bytes",
    "complex_from_json",
    "complex_to_json",
    "dumps_json",
    "format_cell",
    "function_from_json",
    "load_json_file",
    "loads_json",
    "poly_from_json",
    "poly_only_from_json",
    "poly_to_json",
    "rat_from_json",
    "rat_to_json",
    "read_csv_rows",
    "save_json_file",
    "space_from_json",
    "space_to_json",
    "to_native",
    "write_csv",
]
