# this_file: src/cyclab/cli/runner.py
"""Run one experiment manifest and write its outputs."""

import hashlib
import threading
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
from loguru import logger

from .. import __version__
from ..approximants import DescentParams, bpe_estimate, cyclicity_scan, opa, opa_descent
from ..config import AREA_MEASURE, WITNESS_SET_VERSION, GridSpec, Tolerances
from ..corona import (
    CoronaInstance,
    boundary_family,
    constant_family,
    exponent_sweep,
)
from ..errors import CyclabError, ExperimentError
from ..growth import (
    coefficient_growth,
    monomial_growth,
    multiplier_inequality_check,
    multiplier_section_sweep,
    power_sum_inequality,
    resolvent_bound_check,
)
from ..outerlab import boundary_zeros, outer_diagnostics, shapiro_shields_decay
from ..polyrat import Poly, mate
from ..serialization import (
    atoms_from_json,
    canonical_bytes,
    complex_from_json,
    function_from_json,
    poly_from_json,
    poly_only_from_json,
    rat_from_json,
    save_json_file,
    space_from_json,
    to_native,
    write_csv,
)
from ..spaces import BesovDirichlet, QuadratureSpec, SpaceSpec, energy_identity_check, monomial_gram
from .manifest import ExperimentManifest

Rows = list[Sequence[Any]]
Table = tuple[tuple[str, ...], Rows]
Outcome = tuple[dict[str, Any], dict[str, Table]]


@dataclass
class RunContext:
    """Parsed inputs shared by the experiment handlers."""

    manifest: ExperimentManifest
    tolerances: Tolerances
    grid: GridSpec
    threads: int = 1

    @property
    def space(self) -> SpaceSpec:
        if self.manifest.space is None:
            raise ExperimentError("This experiment needs a space")
        return space_from_json(self.manifest.space.model_dump())

    def poly(self, name: str) -> Poly:
        return poly_only_from_json(getattr(self.manifest, name), name)


@dataclass
class RunRecord:
    """Result of one manifest run.

    ``payload`` holds only deterministic results; timing and warnings live beside it.
    """

    manifest_hash: str
    version: str
    timing: float
    payload: dict[str, Any]
    warnings: list[str] = field(default_factory=list)
    tolerance_scale: float = 1.0
    manifest: dict[str, Any] = field(default_factory=dict)
    outputs: list[str] = field(default_factory=list)

    def payload_bytes(self) -> bytes:
        return canonical_bytes(self.payload)

    def to_dict(self) -> dict[str, Any]:
        return {
            "manifest_hash": self.manifest_hash,
            "version": self.version,
            "timing": self.timing,
            "payload": self.payload,
            "warnings": list(self.warnings),
            "tolerance_scale": self.tolerance_scale,
            "manifest": self.manifest,
            "outputs": list(self.outputs),
        }


def manifest_hash(manifest: ExperimentManifest) -> str:
    """sha256 of the canonical JSON of the stored manifest."""
    return hashlib.sha256(canonical_bytes(manifest.stored())).hexdigest()


def conventions(manifest: ExperimentManifest) -> dict[str, Any]:
    space = manifest.space
    return {
        "area_measure": AREA_MEASURE,
        "quadrature": (space.quadrature if space else manifest.quadrature).model_dump(),
        "grid": manifest.grid.model_dump(),
        "witness_set": WITNESS_SET_VERSION,
        "coefficients": "lowest degree first, complex as [re, im]",
    }


def _mate(ctx: RunContext) -> Outcome:
    m = ctx.manifest
    result = mate(rat_from_json(m.b), ctx.tolerances, n_max=m.n_max, grid_size=ctx.grid.circle)
    coefficients = result.coefficients(m.n_max + 1)
    rows: Rows = [(j, complex(c)) for j, c in enumerate(coefficients)]
    return result.to_dict(), {"series": (("j", "c_j"), rows)}


def _gram(ctx: RunContext) -> Outcome:
    gram = monomial_gram(ctx.space, ctx.manifest.n_max)
    payload = {
        "size": gram.size,
        "basis": list(gram.basis_labels),
        "diagonal": [float(np.real(v)) for v in np.diag(gram.entries)],
        "min_eigenvalue": gram.min_eigenvalue,
        "condition_number": gram.condition_number,
        "is_psd": gram.is_psd(ctx.tolerances.psd_floor),
    }
    header = ("m", *gram.basis_labels)
    rows: Rows = [(m, *(complex(v) for v in row)) for m, row in enumerate(gram.entries)]
    return payload, {"gram": (header, rows)}


def _opa(ctx: RunContext) -> Outcome:
    m = ctx.manifest
    space = ctx.space
    f = ctx.poly("f")
    degree = int(m.degree or 0)
    if isinstance(space, BesovDirichlet) and not space.is_hilbert:
        params = DescentParams(**m.descent.model_dump())
        result = opa_descent(space, f, degree, params, ctx.tolerances)
    else:
        result = opa(space, f, degree, ctx.tolerances)
    rows: Rows = [(k, c) for k, c in enumerate(result.coefficients.coeffs)]
    return result.to_dict(), {"approximant": (("k", "p_k"), rows)}


def _cyclicity(ctx: RunContext) -> Outcome:
    m = ctx.manifest
    report = cyclicity_scan(
        ctx.space, ctx.poly("f"), m.n_max, m.schedule, ctx.tolerances, threads=ctx.threads
    )
    return report.to_dict(), {"distances": (("n", "d_n"), list(report.to_rows()))}


def _bpe(ctx: RunContext) -> Outcome:
    m = ctx.manifest
    report = bpe_estimate(ctx.space, complex_from_json(m.zeta), m.n_max, ctx.tolerances)
    return report.to_dict(), {"evaluations": (("n", "v_n"), list(report.to_rows()))}


def _corona_family(ctx: RunContext) -> list[CoronaInstance]:
    m = ctx.manifest
    if m.family is not None:
        build = constant_family if m.family.name == "constant" else boundary_family
        return build(m.family.params, ctx.grid, ctx.tolerances)
    return [
        CoronaInstance.build(
            poly_from_json(item.f1), poly_from_json(item.f2), item.label, ctx.grid, ctx.tolerances
        )
        for item in m.instances or []
    ]


def _corona_sweep(ctx: RunContext) -> Outcome:
    m = ctx.manifest
    family = _corona_family(ctx)
    fit = exponent_sweep(ctx.space, family, m.degree_schedule, ctx.tolerances, ctx.threads)
    payload = fit.to_dict() | {"instances": [inst.to_dict() for inst in family]}
    header = ("delta", "degree", "residual", "g1_norm", "g2_norm")
    return payload, {"sweep": (header, list(fit.to_rows()))}


def _growth(ctx: RunContext) -> Outcome:
    m = ctx.manifest
    if m.designation == "monomial":
        report = monomial_growth(ctx.space, m.n_max)
        return report.to_dict(), {"growth": (("n", "value", "bound"), list(report.to_rows()))}
    if m.designation == "coefficients":
        mate_ = mate(rat_from_json(m.b), ctx.tolerances, n_max=m.n_max)
        growth = coefficient_growth(mate_, m.n_max)
        rows: Rows = list(enumerate(growth.partial_sums))
        return growth.to_dict(), {"partial_sums": (("n", "S_n"), rows)}
    if m.designation == "multiplier":
        check = multiplier_inequality_check(ctx.space, ctx.poly("phi"), m.n_max)
        return check.to_dict(), {}
    if m.designation == "sections":
        schedule = m.schedule or [0, 1, 2, 4, 8, 16, 32, 64]
        sweep = multiplier_section_sweep(ctx.space, ctx.poly("phi"), schedule)
        header = ("n", "op_norm_lower", "gap")
        return sweep.to_dict(), {"sections": (header, list(sweep.to_rows()))}
    if m.designation == "power-sum":
        return power_sum_inequality(int(m.p or 0), float(m.x or 0.0)).to_dict(), {}
    resolvent = resolvent_bound_check(m.c_seq or [], int(m.p or 0), complex_from_json(m.lam))
    return resolvent.to_dict(), {}


def _identity_check(ctx: RunContext) -> Outcome:
    m = ctx.manifest
    identity = energy_identity_check(
        atoms_from_json(m.atoms or []),
        ctx.poly("g"),
        QuadratureSpec.from_dict(m.quadrature.model_dump()),
        ctx.tolerances.quadrature_convergence,
    )
    return identity.to_dict(), {}


def _outer(ctx: RunContext) -> Outcome:
    m = ctx.manifest
    f = function_from_json(m.f)
    if not isinstance(f, Poly):
        raise ExperimentError("The outer experiment needs a polynomial f")
    diagnostics = outer_diagnostics(f, m.modulus_grid, ctx.tolerances)
    points = (
        [complex_from_json(z) for z in m.boundary_points]
        if m.boundary_points is not None
        else [z for z, _ in boundary_zeros(f, ctx.tolerances)]
    )
    profiles = [shapiro_shields_decay(f, zeta, tolerances=ctx.tolerances) for zeta in points]
    rows: Rows = [
        (profile.zeta, r, value, limit)
        for profile in profiles
        for r, value, limit in profile.to_rows()
    ]
    payload = diagnostics.to_dict() | {"decay": [p.to_dict() for p in profiles]}
    return payload, {"decay": (("zeta", "r", "value", "limit_profile"), rows)}


HANDLERS: dict[str, Callable[[RunContext], Outcome]] = {
    "mate": _mate,
    "gram": _gram,
    "opa": _opa,
    "cyclicity": _cyclicity,
    "bpe": _bpe,
    "corona-sweep": _corona_sweep,
    "growth": _growth,
    "identity-check": _identity_check,
    "outer": _outer,
}


def _write_outputs(
    manifest: ExperimentManifest, record: RunRecord, tables: dict[str, Table], out_dir: Path
) -> list[str]:
    written: list[str] = []
    if manifest.outputs.csv_file:
        comments = {
            "manifest_hash": record.manifest_hash,
            "version": record.version,
            "area_measure": AREA_MEASURE,
            "conventions": canonical_bytes(record.payload["conventions"]).decode("utf-8"),
        }
        for table, (header, rows) in tables.items():
            path = write_csv(out_dir / f"{manifest.stem}-{table}.csv", header, rows, comments)
            written.append(str(path))
    if manifest.outputs.json_file:
        path = out_dir / f"{manifest.stem}.json"
        written.append(str(path))
        save_json_file(record.to_dict() | {"outputs": written}, path)
    return written


def run(
    manifest: ExperimentManifest,
    out_dir: str | Path | None = None,
    threads: int = 1,
    tolerance_scale: float = 1.0,
    isolate_warnings: bool = False,
) -> RunRecord:
    """Execute a validated manifest, write CSV/JSON outputs and return the record.

    Args:
        manifest: Parsed manifest
        out_dir: Output directory; nothing is written when None
        threads: Worker threads for scans and sweeps
        tolerance_scale: Multiplies every tolerance (exploratory runs)
        isolate_warnings: Collect only warnings logged from the calling thread

    Raises:
        CyclabError: from the computation, with a note naming the experiment
        ExperimentError: for numerical failures outside the cyclab hierarchy
    """
    tolerances = Tolerances.from_dict(manifest.tolerances)
    if tolerance_scale != 1.0:
        tolerances = tolerances.scaled(tolerance_scale)
    ctx = RunContext(
        manifest, tolerances, GridSpec.from_dict(manifest.grid.model_dump()), max(1, threads)
    )
    digest = manifest_hash(manifest)
    context = {"kind": manifest.kind, "name": manifest.name, "manifest_hash": digest}

    collected: list[str] = []
    caller = threading.get_ident()

    def keep(record: Any) -> bool:
        return not isolate_warnings or record["thread"].id == caller

    sink = logger.add(
        lambda message: collected.append(message.record["message"]),
        level="WARNING",
        format="{message}",
        filter=keep,
    )
    logger.info(f"Running {manifest.kind} experiment {manifest.name!r} ({digest[:12]})")
    started = time.perf_counter()
    try:
        result, tables = HANDLERS[manifest.kind](ctx)
    except CyclabError as e:
        e.add_note(f"while running {manifest.kind} experiment {manifest.name!r}")
        logger.error(f"{manifest.kind} experiment {manifest.name!r} failed: {e}")
        raise
    except (ArithmeticError, np.linalg.LinAlgError) as e:
        logger.error(f"{manifest.kind} experiment {manifest.name!r} failed: {e}")
        raise ExperimentError(f"{manifest.kind} experiment failed: {e}", context) from e
    finally:
        logger.remove(sink)
    timing = time.perf_counter() - started

    record = RunRecord(
        manifest_hash=digest,
        version=__version__,
        timing=timing,
        payload=to_native(
            {"kind": manifest.kind, "result": result, "conventions": conventions(manifest)}
        ),
        warnings=collected,
        tolerance_scale=tolerance_scale,
        manifest=manifest.stored(),
    )
    if out_dir is not None:
        record.outputs = _write_outputs(manifest, record, tables, Path(out_dir))
    logger.info(f"Finished {manifest.name!r} in {timing:.2f}s")
    return record
