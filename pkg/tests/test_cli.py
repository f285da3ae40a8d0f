# this_file: tests/test_cli.py
"""Integration tests for manifests, the runner, suites and the CLI."""

import json

import pytest

from cyclab.cli import (
    CyclabCLI,
    load_manifest,
    main,
    manifest_hash,
    parse_manifest,
    run,
    run_suite,
)
from cyclab.cli.app import AcceptanceFailure, exit_code
from cyclab.cli.suites import SUITES, SuiteResult, SuiteRow, list_suites
from cyclab.errors import ManifestError, PreconditionError, UnknownSuiteError
from cyclab.serialization import load_json_file, read_csv_rows

HARDY_SCAN = {"kind": "cyclicity", "space": {"kind": "hardy"}, "f": [1.0, -1.0], "n_max": 16}


class TestManifest:
    """Test manifest validation."""

    def test_missing_kind(self):
        with pytest.raises(ManifestError, match="kind: Field required") as info:
            parse_manifest({"b": [0.5, 0.5]})
        assert info.value.field_path == "kind"

    def test_missing_kind_input(self):
        with pytest.raises(ManifestError, match="b: Field required"):
            parse_manifest({"kind": "mate"})

    def test_missing_designation_input(self):
        with pytest.raises(ManifestError, match="x: Field required"):
            parse_manifest({"kind": "growth", "designation": "power-sum", "p": 2})

    def test_missing_space_symbol(self):
        with pytest.raises(ManifestError, match="params.b"):
            parse_manifest({"kind": "gram", "space": {"kind": "de-branges-rovnyak"}})

    def test_unknown_field(self):
        with pytest.raises(ManifestError, match="colour"):
            parse_manifest(HARDY_SCAN | {"colour": "blue"})

    def test_modulus_grid_power_of_two(self):
        with pytest.raises(ManifestError, match="power of two"):
            parse_manifest({"kind": "outer", "f": [1.0, -1.0], "modulus_grid": 1000})

    def test_unknown_tolerance(self):
        with pytest.raises(ManifestError, match="Unknown tolerance keys: bogus"):
            parse_manifest(HARDY_SCAN | {"tolerances": {"bogus": 1.0}})

    def test_defaults_are_explicit(self):
        manifest = parse_manifest(HARDY_SCAN | {"tolerances": {"plateau_floor": 0.01}})
        assert manifest.tolerances["plateau_floor"] == 0.01
        assert manifest.tolerances["bezout_accept"] == 1e-8
        assert manifest.stem == "experiment"
        assert manifest.stored()["grid"]["radii"] == 96

    def test_space_defaults(self):
        manifest = parse_manifest({"kind": "gram", "space": {"kind": "weighted-dirichlet"}})
        assert manifest.space is not None
        assert manifest.space.params == {"alpha": 0.0}

    def test_load_inline_and_file(self, temp_path):
        path = temp_path / "scan.json"
        path.write_text(json.dumps(HARDY_SCAN))
        assert load_manifest(str(path)) == load_manifest(json.dumps(HARDY_SCAN))

    def test_load_missing_file(self, temp_path):
        with pytest.raises(ManifestError, match="not found"):
            load_manifest(temp_path / "missing.json")

    def test_load_invalid_json(self):
        with pytest.raises(ManifestError, match="not valid JSON"):
            load_manifest("{not json")


class TestRunner:
    """Test running single manifests."""

    def test_mate_outputs(self, temp_path):
        record = run(parse_manifest({"kind": "mate", "b": [0.5, 0.5]}), temp_path)
        assert record.payload["result"]["N"] == 1
        assert sorted(record.outputs) == [
            str(temp_path / "experiment-series.csv"),
            str(temp_path / "experiment.json"),
        ]
        header, rows = read_csv_rows(temp_path / "experiment-series.csv")
        assert header == ["j", "c_j"]
        assert len(rows) == 65
        text = (temp_path / "experiment-series.csv").read_text()
        assert text.startswith(f"# manifest_hash: {record.manifest_hash}\n")

    def test_json_record(self, temp_path):
        record = run(parse_manifest(HARDY_SCAN | {"name": "scan"}), temp_path)
        stored = load_json_file(temp_path / "scan.json")
        assert stored["manifest_hash"] == record.manifest_hash
        assert stored["payload"]["result"]["verdict"] == "decaying"
        assert stored["payload"]["conventions"]["witness_set"] == "F1"

    def test_custom_stem_and_quiet_outputs(self, temp_path):
        named = parse_manifest(HARDY_SCAN | {"outputs": {"stem": "h2", "json_file": False}})
        record = run(named, temp_path)
        assert record.outputs == [str(temp_path / "h2-distances.csv")]
        quiet = parse_manifest(HARDY_SCAN | {"outputs": {"json_file": False, "csv_file": False}})
        assert run(quiet, temp_path).outputs == []

    def test_hash_tracks_content(self):
        first = manifest_hash(parse_manifest(HARDY_SCAN))
        assert manifest_hash(parse_manifest(dict(reversed(HARDY_SCAN.items())))) == first
        assert manifest_hash(parse_manifest(HARDY_SCAN | {"n_max": 32})) != first

    def test_threads_do_not_change_payload(self):
        manifest = parse_manifest(HARDY_SCAN)
        assert run(manifest).payload_bytes() == run(manifest, threads=3).payload_bytes()

    def test_tolerance_scale_is_recorded(self):
        record = run(parse_manifest(HARDY_SCAN), tolerance_scale=10.0)
        assert record.tolerance_scale == 10.0

    def test_errors_carry_experiment_context(self):
        manifest = parse_manifest(
            {"kind": "bpe", "name": "bad", "space": {"kind": "hardy"}, "zeta": 0.5}
        )
        with pytest.raises(PreconditionError) as info:
            run(manifest)
        assert "while running bpe experiment 'bad'" in info.value.__notes__[0]

    def test_growth_power_sum(self):
        manifest = parse_manifest({"kind": "growth", "designation": "power-sum", "p": 3, "x": 0.5})
        result = run(manifest).payload["result"]
        assert result["holds"]
        assert result["closed_form"] == pytest.approx(26.0)


class TestSuites:
    """Test curated suites."""

    def test_known_suites(self):
        assert list_suites() == ["acceptance", "inequalities", "smoke"]

    def test_smoke_suite(self, temp_path):
        result = run_suite("smoke", temp_path)
        assert result.passed
        assert [row.criterion for row in result.rows] == ["S1", "S2", "S3"]
        assert (temp_path / "smoke" / "summary.json").exists()
        header, rows = read_csv_rows(temp_path / "smoke" / "summary.csv")
        assert header == ["criterion", "title", "passed", "detail"]
        assert all(row[2] == "true" for row in rows)

    def test_inequalities_suite(self):
        result = run_suite("inequalities", threads=2)
        assert result.passed
        assert len(result.records) == 7 * 6 + 3 * 6 * 16

    def test_acceptance_manifests_validate(self):
        criteria = SUITES["acceptance"]()
        assert [c.criterion_id for c in criteria] == [str(k) for k in range(1, 11)]
        for criterion in criteria:
            for data in criterion.manifests:
                parse_manifest(data)

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuiteError, match="smoke"):
            run_suite("nope")


class TestApp:
    """Test the fire entry point and its exit codes."""

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["version"])
        assert info.value.code == 0
        assert "cyclab version" in capsys.readouterr().out

    def test_list_suites(self, capsys):
        CyclabCLI().list_suites()
        assert "smoke (3 criteria)" in capsys.readouterr().out

    def test_run_writes_outputs(self, temp_path):
        path = temp_path / "scan.json"
        path.write_text(json.dumps(HARDY_SCAN | {"name": "cli-scan"}))
        with pytest.raises(SystemExit) as info:
            main([f"--out={temp_path / 'out'}", "run", str(path)])
        assert info.value.code == 0
        assert (temp_path / "out" / "cli-scan-distances.csv").exists()

    def test_invalid_manifest_exit_code(self, temp_path):
        path = temp_path / "bad.json"
        path.write_text(json.dumps({"kind": "mate"}))
        with pytest.raises(SystemExit) as info:
            main(["run", str(path)])
        assert info.value.code == 2

    def test_unknown_suite_exit_code(self):
        with pytest.raises(SystemExit) as info:
            main(["suite", "nope"])
        assert info.value.code == 2

    def test_computation_error_exit_code(self, temp_path):
        path = temp_path / "bpe.json"
        path.write_text(json.dumps({"kind": "bpe", "space": {"kind": "hardy"}, "zeta": 0.5}))
        with pytest.raises(SystemExit) as info:
            main([f"--out={temp_path}", "run", str(path)])
        assert info.value.code == 3

    def test_acceptance_failure_exit_code(self):
        failed = SuiteResult("smoke", [], [SuiteRow("S1", "mate", False, "")])
        assert exit_code(AcceptanceFailure(failed)) == 4
        assert exit_code(ManifestError("kind: Field required")) == 2
        assert exit_code(PreconditionError("zeta")) == 3
