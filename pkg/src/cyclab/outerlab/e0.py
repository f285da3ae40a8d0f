# this_file: src/cyclab/outerlab/e0.py
"""Angular-derivative points E0(b) of rational symbols and their link to point evaluations."""

from dataclasses import dataclass, field
from typing import Any

from loguru import logger

from ..approximants import BpeReport, bpe_estimate
from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import NotInBallError, PoleError, PreconditionError
from ..polyrat import Poly, Rat, poles_in_closed_disc, sup_circle
from ..spaces import DeBrangesRovnyak

# Growth thresholds for a non-member: v_n keeps growing over the computed range.
GROWTH_RATIO = 1.2
GROWTH_FLOOR = 5.0
SMALL_DEGREE = 32


@dataclass(frozen=True)
class E0Report:
    """E0 membership of a boundary point.

    For b rational and holomorphic on the closed disc, b' is continuous up to the
    circle, so zeta lies in E0(b) exactly when |b(zeta)| = 1.
    """

    zeta: complex
    member: bool
    modulus_at_zeta: float
    derivative_modulus: float
    boundary_value: complex

    def to_dict(self) -> dict[str, Any]:
        return {
            "zeta": [self.zeta.real, self.zeta.imag],
            "member": self.member,
            "modulus_at_zeta": self.modulus_at_zeta,
            "derivative_modulus": self.derivative_modulus,
            "boundary_value": [self.boundary_value.real, self.boundary_value.imag],
        }


def _as_rat(b: Rat | Poly) -> Rat:
    return b if isinstance(b, Rat) else Rat.from_poly(b)


def e0_membership(
    b: Rat | Poly, zeta: complex, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> E0Report:
    """Decide zeta in E0(b) by | |b(zeta)| - 1 | <= tolerances.e0.

    Raises:
        PreconditionError: if |zeta| != 1
        PoleError: if b has a pole in the closed disc
        NotInBallError: if sup |b| exceeds 1 on the circle
    """
    point = complex(zeta)
    if abs(abs(point) - 1.0) > 1e-12:
        raise PreconditionError(f"zeta must be unimodular, got {point}")
    symbol = _as_rat(b)
    poles = poles_in_closed_disc(symbol.den, tolerances.ball)
    if poles:
        raise PoleError(f"b has a pole at {poles[0]:.6g} in the closed disc")
    peak = sup_circle(symbol)
    if peak > 1.0 + tolerances.ball:
        raise NotInBallError(f"sup |b| on the circle is {peak:.12g} > 1")
    value = symbol(point)
    derivative = symbol.derivative()(point)
    modulus = abs(value)
    return E0Report(
        zeta=point,
        member=abs(modulus - 1.0) <= tolerances.e0,
        modulus_at_zeta=modulus,
        derivative_modulus=abs(derivative),
        boundary_value=value,
    )


@dataclass(frozen=True)
class BpeConsistency:
    """E0 membership next to bounded point evaluation in H(b).

    Members must show a bounded v_n. Non-members must show growth: an unbounded
    flag, v_{n_max} >= GROWTH_RATIO * v_32 and v_{n_max} > GROWTH_FLOOR.
    """

    e0: E0Report
    bpe: BpeReport
    thresholds: dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def grows(self) -> bool:
        last = self.bpe.value(self.bpe.n_max)
        small = self.bpe.value(min(SMALL_DEGREE, self.bpe.n_max))
        return (
            not self.bpe.bounded_flag and last >= GROWTH_RATIO * small and last > GROWTH_FLOOR
        )

    @property
    def consistent(self) -> bool:
        return self.bpe.bounded_flag if self.e0.member else self.grows

    def to_dict(self) -> dict[str, Any]:
        return {
            "e0": self.e0.to_dict(),
            "bounded_flag": self.bpe.bounded_flag,
            "v_small": self.bpe.value(min(SMALL_DEGREE, self.bpe.n_max)),
            "v_last": self.bpe.value(self.bpe.n_max),
            "consistent": self.consistent,
            "thresholds": dict(self.thresholds),
        }


def e0_bpe_consistency(
    b: Rat | Poly,
    zeta: complex,
    n_max: int = 512,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> BpeConsistency:
    """Compare E0 membership of zeta with the point-evaluation growth in H(b)."""
    report = e0_membership(b, zeta, tolerances)
    space = DeBrangesRovnyak.from_symbol(_as_rat(b), n_max=n_max)
    bpe = bpe_estimate(space, zeta, n_max, tolerances)
    check = BpeConsistency(
        report,
        bpe,
        {
            "growth_ratio": GROWTH_RATIO,
            "growth_floor": GROWTH_FLOOR,
            "small_degree": SMALL_DEGREE,
            "cauchy_tolerance": tolerances.bpe_cauchy,
        },
    )
    if not check.consistent:
        logger.warning(f"E0 membership and point evaluation disagree at zeta={report.zeta}")
    return check
