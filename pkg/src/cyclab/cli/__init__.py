# this_file: src/cyclab/cli/__init__.py
"""cyclab command-line interface and experiment runner."""

from .app import CyclabCLI, main
from .manifest import ExperimentManifest, load_manifest, parse_manifest
from .runner import RunRecord, manifest_hash, run
from .suites import SuiteResult, SuiteRow, list_suites, run_suite

__all__ = [
    "CyclabCLI",
    "ExperimentManifest",
    "RunRecord",
    "SuiteResult",
    "SuiteRow",
    "list_suites",
    "load_manifest",
    "main",
    "manifest_hash",
    "parse_manifest",
    "run",
    "run_suite",
]
