# this_file: src/cyclab/cli/suites.py
"""Curated manifest sets with pass/fail rows per acceptance criterion."""

import hashlib
import math
import os
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
from loguru import logger

from ..approximants import duality_check, opa, shift_matrix
from ..config import GridSpec
from ..corona import CoronaInstance, delta_lambda_dominated, delta_lambda_outer, minimal_bezout
from ..errors import CyclabError, UnknownSuiteError
from ..outerlab import e0_membership
from ..polyrat import Poly, Rat, mate, sup_circle
from ..serialization import canonical_bytes, save_json_file, write_csv
from ..spaces import (
    DeBrangesRovnyak,
    Hardy,
    HarmonicDirichlet,
    MeasureAtoms,
    SpaceSpec,
    WeightedDirichlet,
    hermitian_form,
)
from .manifest import ExperimentManifest, parse_manifest
from .runner import RunRecord, run

Verdict = tuple[bool, str]
Evaluator = Callable[[Sequence[RunRecord]], Verdict]

HALF_PLUS_HALF_Z = [0.5, 0.5]
DOUBLE_ZERO_ALPHA = 3.0 - 2.0 * math.sqrt(2.0)

# Rational symbols with boundary zeros of the mate of multiplicity 0, 1 and 2.
B_FAMILY: tuple[Any, ...] = (
    HALF_PLUS_HALF_Z,
    [0.0, 0.5],
    [0.25, 0.5, 0.25],
    [0.0, 0.75, 0.25],
    [0.5, -0.5],
    [
        c / (4.0 * math.sqrt(DOUBLE_ZERO_ALPHA))
        for c in (1.0, 1.0 - DOUBLE_ZERO_ALPHA, -DOUBLE_ZERO_ALPHA)
    ],
    {"num": [0.5], "den": [1.0, -0.5]},
)
DIRAC_AT_ONE = [[[1.0, 0.0], 1.0]]


@dataclass(frozen=True)
class Criterion:
    """One summary row: its manifests and how to judge their records."""

    criterion_id: str
    title: str
    manifests: tuple[dict[str, Any], ...] = ()
    evaluate: Evaluator | None = None
    determinism: bool = False


@dataclass(frozen=True)
class SuiteRow:
    criterion: str
    title: str
    passed: bool
    detail: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "criterion": self.criterion,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class SuiteResult:
    name: str
    records: list[RunRecord]
    rows: list[SuiteRow]
    timing: float = 0.0
    outputs: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def payload_bytes(self) -> bytes:
        return canonical_bytes([record.payload for record in self.records])

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "rows": [row.to_dict() for row in self.rows],
            "manifest_hashes": [record.manifest_hash for record in self.records],
            "timing": self.timing,
        }


def _result(record: RunRecord) -> dict[str, Any]:
    return record.payload["result"]


def _space(kind: str, **params: Any) -> dict[str, Any]:
    return {"kind": kind, "params": params}


def _dbr(b: Any, n_max: int = 64) -> dict[str, Any]:
    return _space("de-branges-rovnyak", b=b, n_max=n_max)


def _quiet(manifest: dict[str, Any]) -> dict[str, Any]:
    return manifest | {"outputs": {"json_file": False, "csv_file": False}}


def _a0(mate_json: dict[str, Any]) -> complex:
    num, den = mate_json["a"]["num"][0], mate_json["a"]["den"][0]
    return complex(*num) / complex(*den)


# smoke


def _smoke_mate(records: Sequence[RunRecord]) -> Verdict:
    result = _result(records[0])
    num = [complex(*c) for c in result["a"]["num"]]
    den0 = complex(*result["a"]["den"][0])
    gap = max(abs(c / den0 - e) for c, e in zip(num, (0.5, -0.5), strict=True))
    return gap <= 1e-9 and len(num) == 2, f"a = (1 - z)/2 within {gap:.1e}"


def _smoke_gram(records: Sequence[RunRecord]) -> Verdict:
    result = _result(records[0])
    gap = max(abs(v - 1.0) for v in result["diagonal"])
    return gap <= 1e-12 and result["is_psd"], f"identity Gram, diagonal gap {gap:.1e}"


def _smoke_opa(records: Sequence[RunRecord]) -> Verdict:
    distance = _result(records[0])["distance"]
    gap = abs(distance**2 - 1.0 / 6.0)
    return gap <= 1e-9, f"d_4^2 = {distance**2:.12f} (expected 1/6)"


def smoke_suite() -> list[Criterion]:
    hardy = _space("hardy")
    return [
        Criterion(
            "S1", "mate of (1+z)/2", ({"kind": "mate", "b": HALF_PLUS_HALF_Z},), _smoke_mate
        ),
        Criterion(
            "S2", "Hardy Gram", ({"kind": "gram", "space": hardy, "n_max": 8},), _smoke_gram
        ),
        Criterion(
            "S3",
            "Hardy OPA of 1 - z",
            ({"kind": "opa", "space": hardy, "f": [1.0, -1.0], "degree": 4},),
            _smoke_opa,
        ),
    ]


# inequalities

POWER_SUM_X = (0.1, 0.25, 0.5, 0.75, 0.9, 0.99)
RESOLVENT_RADII = (1.01, 1.1, 1.5, 2.0, 5.0, 10.0)
RESOLVENT_POWERS = (0, 1, 2)
RESOLVENT_ANGLES = 16
RESOLVENT_LENGTH = 256


def _inequality_manifests() -> tuple[dict[str, Any], ...]:
    manifests: list[dict[str, Any]] = []
    for p in range(7):
        for x in POWER_SUM_X:
            manifests.append(
                _quiet({"kind": "growth", "designation": "power-sum", "p": p, "x": x})
            )
    for p in RESOLVENT_POWERS:
        c_seq = [float(max(n, 1) ** p) for n in range(RESOLVENT_LENGTH)]
        for radius in RESOLVENT_RADII:
            for k in range(RESOLVENT_ANGLES):
                theta = 2.0 * math.pi * k / RESOLVENT_ANGLES
                lam = [radius * math.cos(theta), radius * math.sin(theta)]
                manifests.append(
                    _quiet(
                        {
                            "kind": "growth",
                            "designation": "resolvent",
                            "p": p,
                            "lam": lam,
                            "c_seq": c_seq,
                        }
                    )
                )
    return tuple(manifests)


def _inequalities(records: Sequence[RunRecord]) -> Verdict:
    failures = [r for r in records if not _result(r)["holds"]]
    return not failures, f"{len(records) - len(failures)}/{len(records)} inequalities hold"


def inequalities_criterion(criterion_id: str = "9") -> Criterion:
    return Criterion(
        criterion_id,
        "power-sum and resolvent inequalities",
        _inequality_manifests(),
        _inequalities,
    )


def inequalities_suite() -> list[Criterion]:
    return [inequalities_criterion()]


# full acceptance suite


def _mate_identity(records: Sequence[RunRecord]) -> Verdict:
    worst = max(_result(r)["roundtrip_residual"] for r in records)
    positive = all(
        _a0(_result(r)).real > 0 and abs(_a0(_result(r)).imag) <= 1e-12 for r in records
    )
    multiplicities = sorted({_result(r)["N"] for r in records})
    detail = f"{len(records)} symbols, worst residual {worst:.1e}, N in {multiplicities}"
    return worst <= 1e-9 and positive and 2 in multiplicities, detail


def _hb_norms(records: Sequence[RunRecord]) -> Verdict:
    diagonal = _result(records[0])["diagonal"]
    gap = max(abs(diagonal[n] - (4 * n + 2)) for n in range(1, len(diagonal)))
    return gap <= 1e-9, f"||chi_n||^2 = 4n + 2 up to n = {len(diagonal) - 1}, gap {gap:.1e}"


def _partial_sum_bound(b: Any, fit_until: int = 50, verify_until: int = 400) -> float:
    """min of (C n^(2N + 1) - S_n) / n^(2N + 1) over fit_until < n <= verify_until.

    C is fitted on n <= fit_until.
    """
    symbol = Rat.from_json(b) if isinstance(b, dict) else Rat.from_poly(Poly.from_json(b))
    mate_ = mate(symbol, n_max=verify_until)
    partial = np.cumsum(np.abs(mate_.coefficients(verify_until + 1)) ** 2)
    scale = np.maximum(np.arange(verify_until + 1), 1).astype(float) ** (2 * mate_.N + 1)
    constant = float(np.max(partial[: fit_until + 1] / scale[: fit_until + 1]))
    tail = slice(fit_until + 1, verify_until + 1)
    return float(np.min((constant * scale[tail] - partial[tail]) / scale[tail]))


def _growth_bounds(records: Sequence[RunRecord]) -> Verdict:
    margins = [_result(r)["bound_margin"] for r in records]
    pointwise = [
        _result(r)["extras"]["pointwise_margin"]
        for r in records
        if "pointwise_margin" in _result(r)["extras"]
    ]
    partial = [_partial_sum_bound(b) for b in (HALF_PLUS_HALF_Z, B_FAMILY[5])]
    worst = min(margins + pointwise + partial)
    return worst >= -1e-9, f"worst margin {worst:.3e} over {len(margins) + len(partial)} checks"


def _dense_distance(space: SpaceSpec, f: Poly, degree: int) -> float:
    """Brute-force distance of 1 to span{z^k f : k <= degree} by a dense normal-equation solve."""
    a = shift_matrix(f, degree)
    form = hermitian_form(space, a.shape[0])
    e0 = np.zeros(a.shape[0], dtype=complex)
    e0[0] = 1.0
    x = np.linalg.solve(a.conj().T @ form @ a, a.conj().T @ form @ e0)
    r = a @ x - e0
    return math.sqrt(max(float(np.real(r.conj() @ form @ r)), 0.0))


def _opa_oracle(records: Sequence[RunRecord]) -> Verdict:
    rng = np.random.default_rng(20240504)
    spaces: list[SpaceSpec] = [
        Hardy(),
        WeightedDirichlet(0.0),
        DeBrangesRovnyak.from_symbol(Rat.from_poly(Poly(tuple(HALF_PLUS_HALF_Z)))),
        HarmonicDirichlet(MeasureAtoms.point_mass(1.0)),
    ]
    worst = 0.0
    for i in range(20):
        size = int(rng.integers(1, 4))
        f = Poly(tuple(rng.normal(size=size) + 1j * rng.normal(size=size)))
        degree = int(rng.integers(0, 13))
        space = spaces[i % len(spaces)]
        oracle = _dense_distance(space, f, degree)
        worst = max(worst, abs(opa(space, f, degree).distance - oracle) / max(1.0, oracle))
    distances = _result(records[0])["distances"]
    closed = max(abs(d**2 - 1.0 / (n + 2)) for n, d in enumerate(distances))
    detail = f"oracle gap {worst:.1e} on 20 instances, Hardy closed-form gap {closed:.1e}"
    return worst <= 1e-9 and closed <= 1e-9, detail


def _bpe_triangle(records: Sequence[RunRecord]) -> Verdict:
    hb_bpe, hb_scan, hardy_bpe, dirichlet_bpe, hardy_scan, dirichlet_scan = map(_result, records)
    member = e0_membership(Rat.from_poly(Poly(tuple(HALF_PLUS_HALF_Z))), 1.0).member
    space = DeBrangesRovnyak.from_symbol(Rat.from_poly(Poly(tuple(HALF_PLUS_HALF_Z))), n_max=256)
    duality = duality_check(space, Poly((1.0, -1.0)), 1.0, 128)
    v512 = hardy_bpe["values"][-1]
    checks = {
        "e0": member,
        "H(b) bounded": hb_bpe["bounded_flag"],
        "H(b) plateau": hb_scan["verdict"] == "plateau",
        "duality": duality.holds(),
        "H2 unbounded": not hardy_bpe["bounded_flag"] and v512 > 10,
        "D unbounded": not dirichlet_bpe["bounded_flag"],
        "H2 decaying": hardy_scan["verdict"] == "decaying",
        "D decaying": dirichlet_scan["verdict"] == "decaying",
    }
    failed = [name for name, ok in checks.items() if not ok]
    detail = f"min d_n v_(n+1) = {duality.minimum:.6f}, v_512(H2) = {v512:.2f}"
    return not failed, detail + (f"; failed: {', '.join(failed)}" if failed else "")


def _random_poly(rng: np.random.Generator, degree: int) -> Poly:
    size = degree + 1
    return Poly(tuple(rng.normal(size=size) + 1j * rng.normal(size=size)))


def _delta_lambda(_records: Sequence[RunRecord]) -> Verdict:
    rng = np.random.default_rng(31415)
    grid = GridSpec(radii=48, angles=256)
    worst = math.inf
    for _ in range(100):
        f = _random_poly(rng, int(rng.integers(0, 4)))
        h = _random_poly(rng, int(rng.integers(0, 3)))
        h = h.scaled(0.999 / sup_circle(h))
        lam = complex(*rng.uniform(-3.0, 3.0, size=2))
        if abs(lam) < 1e-3:
            lam = 1.0
        report = delta_lambda_dominated(f, f * h, lam, grid)
        worst = min(worst, report.value - report.bound)
    failures = 0
    for _ in range(50):
        roots = [
            complex(np.exp(1j * rng.uniform(0, 2 * math.pi)) * rng.uniform(1.05, 3.0))
            for _ in range(int(rng.integers(1, 4)))
        ]
        f = Poly.from_roots(roots)
        lam = complex(np.exp(1j * rng.uniform(0, 2 * math.pi)) * rng.uniform(0.1, 0.95))
        report = delta_lambda_outer(f, lam, float(rng.uniform(0.1, 1.0)), grid)
        failures += not report.holds
    detail = f"dominated: worst value - bound {worst:.3e}; outer: {50 - failures}/50 hold"
    return worst >= -1e-4 and failures == 0, detail


def _corona(records: Sequence[RunRecord]) -> Verdict:
    rng = np.random.default_rng(2718)
    space = Hardy()
    grid = GridSpec(radii=48, angles=256)
    worst = 0.0
    for k in range(10):
        f1 = _random_poly(rng, 1 + k % 2)
        f2 = _random_poly(rng, 1 + (k // 2) % 2)
        inst = CoronaInstance.build(f1, f2, f"pair-{k}", grid)
        solution = minimal_bezout(space, inst, range(f1.degree + f2.degree + 1))
        worst = max(worst, solution.residual if solution else math.inf)
    constant, boundary = _result(records[0]), _result(records[1])
    a_const, a_boundary = constant["fitted_A"], boundary["fitted_A"]
    detail = (
        f"worst Bezout residual {worst:.1e}; constant family A = {a_const:.4f}; "
        f"boundary family A = {a_boundary:.4f} (fit residual {boundary['fit_residual']:.2e})"
    )
    return worst < 1e-8 and abs(a_const - 1.0) <= 0.05, detail


def _energy_identity(records: Sequence[RunRecord]) -> Verdict:
    gaps = [_result(r)["relative_gap"] for r in records]
    return max(gaps) <= 1e-4, f"worst relative gap {max(gaps):.1e} over {len(gaps)} cases"


ENERGY_ATOMS: tuple[list[list[Any]], ...] = (
    DIRAC_AT_ONE,
    [[[0.0, 1.0], 0.5], [[0.5, 0.0], 0.25], [[-0.3, 0.4], 1.0]],
    [
        [[1.0, 0.0], 1.0],
        [[-1.0, 0.0], 0.5],
        [[0.0, -1.0], 0.25],
        [[0.6, 0.0], 0.3],
        [[0.0, 0.2], 0.7],
        [[-0.5, -0.5], 0.2],
        [[0.3, 0.3], 0.1],
        [[-0.8, 0.0], 0.4],
    ],
)


def _energy_manifests() -> tuple[dict[str, Any], ...]:
    rng = np.random.default_rng(1618)
    manifests = []
    for atoms, degree in zip(ENERGY_ATOMS, (20, 12, 8), strict=True):
        g = [[float(v), float(w)] for v, w in rng.normal(size=(degree + 1, 2))]
        manifests.append({"kind": "identity-check", "atoms": atoms, "g": g})
    return tuple(manifests)


def acceptance_suite() -> list[Criterion]:
    hardy = _space("hardy")
    dirichlet = _space("weighted-dirichlet", alpha=0.0)
    hb = _dbr(HALF_PLUS_HALF_Z, n_max=512)
    one_minus_z = [1.0, -1.0]
    return [
        Criterion(
            "1",
            "mate identity |a|^2 + |b|^2 = 1",
            tuple({"kind": "mate", "b": b} for b in B_FAMILY),
            _mate_identity,
        ),
        Criterion(
            "2",
            "H(b) monomial norms",
            ({"kind": "gram", "space": _dbr(HALF_PLUS_HALF_Z, 200), "n_max": 200},)
            + tuple({"kind": "gram", "space": _dbr(b), "n_max": 64} for b in B_FAMILY),
            _hb_norms,
        ),
        Criterion(
            "3",
            "growth bounds",
            tuple(
                {
                    "kind": "growth",
                    "designation": "monomial",
                    "space": _space("besov-dirichlet", p=p, alpha=alpha),
                    "n_max": 200,
                }
                for p, alpha in ((2.0, 0.0), (2.0, 1.0), (3.0, 1.5))
            )
            + (
                {
                    "kind": "growth",
                    "designation": "monomial",
                    "space": _space("harmonic-dirichlet", atoms=DIRAC_AT_ONE),
                    "n_max": 200,
                },
            ),
            _growth_bounds,
        ),
        Criterion(
            "4",
            "OPA oracle equivalence",
            (
                {
                    "kind": "cyclicity",
                    "space": hardy,
                    "f": one_minus_z,
                    "n_max": 50,
                    "schedule": list(range(51)),
                },
            ),
            _opa_oracle,
        ),
        Criterion(
            "5",
            "point evaluation, E0 and cyclicity",
            (
                {"kind": "bpe", "space": hb, "zeta": 1.0, "n_max": 512},
                {"kind": "cyclicity", "space": hb, "f": one_minus_z, "n_max": 128},
                {"kind": "bpe", "space": hardy, "zeta": 1.0, "n_max": 512},
                {"kind": "bpe", "space": dirichlet, "zeta": 1.0, "n_max": 512},
                {"kind": "cyclicity", "space": hardy, "f": one_minus_z, "n_max": 128},
                {"kind": "cyclicity", "space": dirichlet, "f": one_minus_z, "n_max": 128},
            ),
            _bpe_triangle,
        ),
        Criterion("6", "delta_lambda lower bounds", (), _delta_lambda),
        Criterion(
            "7",
            "corona Bezout solutions and exponent sweeps",
            (
                {
                    "kind": "corona-sweep",
                    "space": hardy,
                    "family": {
                        "name": "constant",
                        "params": [float(t) for t in np.geomspace(0.01, 0.5, 8)],
                    },
                },
                {
                    "kind": "corona-sweep",
                    "space": hardy,
                    "family": {
                        "name": "boundary",
                        "params": [float(d) for d in np.geomspace(0.005, 0.5, 8)],
                    },
                },
            ),
            _corona,
        ),
        Criterion("8", "D(mu) energy identity", _energy_manifests(), _energy_identity),
        inequalities_criterion("9"),
        Criterion("10", "determinism across thread counts", determinism=True),
    ]


SUITES: dict[str, Callable[[], list[Criterion]]] = {
    "smoke": smoke_suite,
    "acceptance": acceptance_suite,
    "inequalities": inequalities_suite,
}


def list_suites() -> list[str]:
    return sorted(SUITES)


def _parse(criteria: Sequence[Criterion]) -> list[tuple[str, ExperimentManifest]]:
    parsed = []
    for criterion in criteria:
        for k, data in enumerate(criterion.manifests):
            name = f"c{criterion.criterion_id}-{k:03d}-{data['kind']}"
            parsed.append((criterion.criterion_id, parse_manifest({"name": name} | data)))
    return parsed


def _run_all(
    manifests: Sequence[ExperimentManifest],
    out_dir: Path | None,
    threads: int,
    tolerance_scale: float,
) -> list[RunRecord]:
    def one(manifest: ExperimentManifest) -> RunRecord:
        return run(manifest, out_dir, 1, tolerance_scale, isolate_warnings=True)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, manifests))
    return [one(m) for m in manifests]


def _evaluate(criterion: Criterion, records: Sequence[RunRecord]) -> SuiteRow:
    if criterion.evaluate is None:
        return SuiteRow(criterion.criterion_id, criterion.title, True, "")
    try:
        passed, detail = criterion.evaluate(records)
    except (CyclabError, ArithmeticError, KeyError, IndexError) as e:
        logger.error(f"Criterion {criterion.criterion_id} could not be evaluated: {e}")
        passed, detail = False, f"{type(e).__name__}: {e}"
    return SuiteRow(criterion.criterion_id, criterion.title, bool(passed), detail)


def run_suite(
    name: str,
    out_dir: str | Path | None = None,
    threads: int = 1,
    tolerance_scale: float = 1.0,
) -> SuiteResult:
    """Run every manifest of a suite in manifest order and evaluate its criteria.

    Raises:
        UnknownSuiteError: if ``name`` is not a known suite id
    """
    if name not in SUITES:
        raise UnknownSuiteError(f"Unknown suite {name!r}; known: {', '.join(list_suites())}")
    started = time.perf_counter()
    criteria = SUITES[name]()
    parsed = _parse(criteria)
    target = Path(out_dir) / name if out_dir is not None else None
    threads = max(1, threads)
    logger.info(f"Suite {name}: {len(parsed)} manifests on {threads} thread(s)")
    records = _run_all([m for _, m in parsed], target, threads, tolerance_scale)

    rows: list[SuiteRow] = []
    for criterion in criteria:
        if criterion.determinism:
            other = 1 if threads > 1 else max(2, os.cpu_count() or 2)
            rerun = _run_all([m for _, m in parsed], None, other, tolerance_scale)
            same = canonical_bytes([r.payload for r in rerun]) == canonical_bytes(
                [r.payload for r in records]
            )
            detail = f"{len(records)} payloads compared ({threads} vs {other} threads)"
            rows.append(SuiteRow(criterion.criterion_id, criterion.title, same, detail))
            continue
        own = [
            r for (cid, _), r in zip(parsed, records, strict=True) if cid == criterion.criterion_id
        ]
        rows.append(_evaluate(criterion, own))

    result = SuiteResult(name, records, rows, time.perf_counter() - started)
    if target is not None:
        summary = target / "summary.json"
        save_json_file(result.to_dict(), summary)
        table = write_csv(
            target / "summary.csv",
            ("criterion", "title", "passed", "detail"),
            [(r.criterion, r.title, r.passed, r.detail) for r in rows],
            {"suite": name, "payload_sha256": hashlib.sha256(result.payload_bytes()).hexdigest()},
        )
        result.outputs = [str(summary), str(table)]
    logger.info(f"Suite {name}: {sum(r.passed for r in rows)}/{len(rows)} criteria passed")
    return result
