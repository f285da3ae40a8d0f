# this_file: src/cyclab/cli/manifest.py
"""Experiment manifests: a single JSON document validated by pydantic."""

from pathlib import Path
from typing import Any, Literal, Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from ..config import DEFAULT_GRID, DEFAULT_TOLERANCES, Tolerances
from ..errors import ManifestError
from ..serialization import load_json_file, loads_json

ExperimentKind = Literal[
    "mate",
    "gram",
    "opa",
    "cyclicity",
    "bpe",
    "corona-sweep",
    "growth",
    "identity-check",
    "outer",
]
Designation = Literal[
    "monomial", "coefficients", "multiplier", "sections", "power-sum", "resolvent"
]
SpaceKind = Literal[
    "hardy", "weighted-dirichlet", "besov-dirichlet", "de-branges-rovnyak", "harmonic-dirichlet"
]

ComplexJson = float | list[float]
CoefficientsJson = list[float | list[float]]
FunctionJson = CoefficientsJson | dict[str, CoefficientsJson]

REQUIRED_INPUTS: dict[str, tuple[str, ...]] = {
    "mate": ("b",),
    "gram": ("space",),
    "opa": ("space", "f", "degree"),
    "cyclicity": ("space", "f"),
    "bpe": ("space", "zeta"),
    "corona-sweep": ("space",),
    "growth": ("designation",),
    "identity-check": ("atoms", "g"),
    "outer": ("f",),
}

DESIGNATION_INPUTS: dict[str, tuple[str, ...]] = {
    "monomial": ("space",),
    "coefficients": ("b",),
    "multiplier": ("space", "phi"),
    "sections": ("space", "phi"),
    "power-sum": ("p", "x"),
    "resolvent": ("c_seq", "p", "lam"),
}

SPACE_DEFAULTS: dict[str, dict[str, Any]] = {
    "hardy": {},
    "weighted-dirichlet": {"alpha": 0.0},
    "besov-dirichlet": {"p": 2.0, "alpha": 0.0},
    "de-branges-rovnyak": {"n_max": 64},
    "harmonic-dirichlet": {},
}


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class QuadratureModel(_Strict):
    radial_nodes: int = Field(default=128, ge=1)
    angular_nodes: int = Field(default=256, ge=1)
    scheme: Literal["gauss-legendre", "gauss-jacobi"] = "gauss-legendre"


class GridModel(_Strict):
    radii: int = Field(default=DEFAULT_GRID.radii, ge=2)
    angles: int = Field(default=DEFAULT_GRID.angles, ge=4)
    circle: int = Field(default=DEFAULT_GRID.circle, ge=4)
    refine_levels: int = Field(default=DEFAULT_GRID.refine_levels, ge=0)
    refine_points: int = Field(default=DEFAULT_GRID.refine_points, ge=3)
    refine_shrink: float = Field(default=DEFAULT_GRID.refine_shrink, gt=1)


class SpaceModel(_Strict):
    """{"kind": ..., "params": {...}, "quadrature": {...}} with kind defaults filled in."""

    kind: SpaceKind
    params: dict[str, Any] = Field(default_factory=dict)
    quadrature: QuadratureModel = Field(default_factory=QuadratureModel)

    @model_validator(mode="after")
    def _materialize(self) -> Self:
        self.params = SPACE_DEFAULTS[self.kind] | self.params
        if self.kind == "de-branges-rovnyak" and "b" not in self.params:
            raise ValueError("params.b: Field required")
        if self.kind == "harmonic-dirichlet" and "atoms" not in self.params:
            raise ValueError("params.atoms: Field required")
        return self


class FamilyModel(_Strict):
    """A built-in corona family: "constant" takes t values, "boundary" takes d values."""

    name: Literal["constant", "boundary"]
    params: list[float] = Field(min_length=1)


class InstanceModel(_Strict):
    f1: CoefficientsJson
    f2: CoefficientsJson
    label: str = ""


class DescentModel(_Strict):
    max_iterations: int = Field(default=2000, ge=1)
    restarts: int = Field(default=3, ge=0)
    warm_start: bool = True


class OutputModel(_Strict):
    json_file: bool = True
    csv_file: bool = True
    stem: str | None = None


class ExperimentManifest(_Strict):
    """One experiment. Every tolerance and grid parameter is explicit after parsing."""

    kind: ExperimentKind
    name: str = "experiment"
    space: SpaceModel | None = None
    b: FunctionJson | None = None
    f: FunctionJson | None = None
    g: CoefficientsJson | None = None
    phi: CoefficientsJson | None = None
    atoms: list[tuple[ComplexJson, float]] | None = None
    zeta: ComplexJson | None = None
    degree: int | None = Field(default=None, ge=0)
    n_max: int = Field(default=64, ge=1)
    schedule: list[int] | None = None
    family: FamilyModel | None = None
    instances: list[InstanceModel] | None = None
    degree_schedule: list[int] = Field(default_factory=lambda: [0, 1, 2, 4, 8, 16])
    designation: Designation | None = None
    boundary_points: list[ComplexJson] | None = None
    modulus_grid: int = Field(default=2**22, ge=16)
    p: int | None = Field(default=None, ge=0)
    x: float | None = Field(default=None, gt=0, lt=1)
    lam: ComplexJson | None = None
    c_seq: list[float] | None = None
    grid: GridModel = Field(default_factory=GridModel)
    quadrature: QuadratureModel = Field(default_factory=QuadratureModel)
    descent: DescentModel = Field(default_factory=DescentModel)
    tolerances: dict[str, float] = Field(default_factory=DEFAULT_TOLERANCES.to_dict)
    outputs: OutputModel = Field(default_factory=OutputModel)

    @field_validator("tolerances")
    @classmethod
    def _full_tolerances(cls, value: dict[str, float]) -> dict[str, float]:
        defaults = DEFAULT_TOLERANCES.to_dict()
        unknown = sorted(set(value) - set(defaults))
        if unknown:
            raise ValueError(f"Unknown tolerance keys: {', '.join(unknown)}")
        merged = defaults | value
        Tolerances.from_dict(merged)
        return merged

    @field_validator("modulus_grid")
    @classmethod
    def _power_of_two(cls, value: int) -> int:
        if value & (value - 1):
            raise ValueError(f"Grid size must be a power of two, got {value}")
        return value

    @model_validator(mode="after")
    def _required_inputs(self) -> Self:
        needed = list(REQUIRED_INPUTS[self.kind])
        if self.kind == "growth" and self.designation is not None:
            needed += DESIGNATION_INPUTS[self.designation]
        for name in needed:
            if getattr(self, name) is None:
                raise ValueError(f"{name}: Field required")
        if self.kind == "corona-sweep" and self.family is None and not self.instances:
            raise ValueError("family: Field required (or give instances)")
        return self

    @property
    def stem(self) -> str:
        return self.outputs.stem or self.name

    def stored(self) -> dict[str, Any]:
        """The manifest as stored and hashed, defaults included."""
        return self.model_dump(mode="json")


def _field_path(error: dict[str, Any]) -> tuple[str, str]:
    message = str(error.get("msg", "invalid value")).removeprefix("Value error, ")
    location = ".".join(str(part) for part in error.get("loc", ()))
    if not location and ": " in message:
        location, _, message = message.partition(": ")
    return location, message


def parse_manifest(data: dict[str, Any]) -> ExperimentManifest:
    """Validate a manifest mapping.

    Raises:
        ManifestError: naming the first offending field, e.g. ``kind: Field required``
    """
    try:
        return ExperimentManifest.model_validate(data)
    except ValidationError as e:
        location, message = _field_path(e.errors()[0])
        text = f"{location}: {message}" if location else message
        raise ManifestError(text, field_path=location or None) from e


def load_manifest(source: str | Path | dict[str, Any]) -> ExperimentManifest:
    """Parse a manifest from a path, a JSON string or a mapping."""
    if isinstance(source, dict):
        return parse_manifest(source)
    text = str(source)
    try:
        if text.lstrip().startswith("{"):
            data = loads_json(text)
        else:
            path = Path(source)
            if not path.exists():
                raise ManifestError(f"Manifest file not found: {path}")
            data = load_json_file(path)
    except ManifestError:
        raise
    except ValueError as e:
        raise ManifestError(f"Manifest is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ManifestError("A manifest must be a JSON object")
    return parse_manifest(data)
