# this_file: src/cyclab/serialization/codecs.py
"""JSON forms of the domain types: polynomials, rationals, spaces and measures."""

from collections.abc import Sequence
from typing import Any

from ..polyrat import Poly, Rat
from ..spaces import MeasureAtoms, SpaceSpec, space_from_dict


def complex_from_json(value: Any) -> complex:
    """[re, im], a bare number or a string accepted by ``complex``."""
    if isinstance(value, list | tuple):
        if len(value) != 2:
            raise ValueError(f"Complex number must be [re, im], got {value}")
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, str):
        return complex(value.replace(" ", ""))
    return complex(value)


def complex_to_json(value: complex) -> list[float]:
    return [value.real, value.imag]


def poly_to_json(p: Poly) -> list[list[float]]:
    return p.to_json()


def poly_from_json(data: Sequence[Any]) -> Poly:
    """Coefficients lowest degree first, each a number or [re, im]."""
    return Poly.from_json(data)


def rat_to_json(r: Rat) -> dict[str, list[list[float]]]:
    return r.to_json()


def function_from_json(data: Any) -> Poly | Rat:
    """A coefficient list is a polynomial; {"num", "den"} is a rational function."""
    if isinstance(data, dict):
        rational = Rat.from_json(data)
        if rational.is_polynomial:
            return rational.num.scaled(1.0 / rational.den.coefficient(0))
        return rational
    return Poly.from_json(data)


def rat_from_json(data: Any) -> Rat:
    """Like :func:`function_from_json` but always returns a rational function."""
    value = function_from_json(data)
    return value if isinstance(value, Rat) else Rat.from_poly(value)


def poly_only_from_json(data: Any, name: str = "f") -> Poly:
    value = function_from_json(data)
    if isinstance(value, Rat):
        raise ValueError(f"{name} must be a polynomial, got a rational function")
    return value


def space_to_json(space: SpaceSpec) -> dict[str, Any]:
    return space.to_dict()


def space_from_json(data: dict[str, Any]) -> SpaceSpec:
    return space_from_dict(data)


def atoms_to_json(atoms: MeasureAtoms) -> list[list[Any]]:
    return atoms.to_json()


def atoms_from_json(data: Sequence[Sequence[Any]]) -> MeasureAtoms:
    return MeasureAtoms.from_json(data)
