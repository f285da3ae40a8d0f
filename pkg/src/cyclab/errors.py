# this_file: src/cyclab/errors.py
"""Exception hierarchy for cyclab.

Every error a computation can raise derives from :class:`CyclabError`. Errors that
signal bad input also derive from :class:`ValueError` so that callers can keep
catching the builtin type.
"""

from typing import Any


class CyclabError(Exception):
    """Base class for all cyclab errors."""


class PoleError(CyclabError, ValueError):
    """A rational function was evaluated at (or too close to) a pole."""


class SeriesError(CyclabError, ValueError):
    """Power-series division with a vanishing constant term."""


class NegativityError(CyclabError, ValueError):
    """A trigonometric polynomial expected to be nonnegative is not."""


class FactorizationError(CyclabError):
    """Spectral factorization could not pair the roots."""


class NotInBallError(CyclabError, ValueError):
    """A symbol b leaves the closed unit ball of H-infinity."""


class InnerFunctionError(CyclabError, ValueError):
    """A symbol b is inner, so it has no pythagorean mate."""


class NonHilbertSpaceError(CyclabError, ValueError):
    """An inner product was requested in a Banach (p != 2) space."""


class SingularGramError(CyclabError):
    """A Gram system is numerically singular."""

    def __init__(self, message: str, condition: float | None = None) -> None:
        super().__init__(message)
        self.condition = condition


class NonConvergenceError(CyclabError):
    """An iterative minimization stopped before reaching its tolerance."""


class CoronaError(CyclabError, ValueError):
    """A corona instance has a common zero on the closed disc."""


class DominationError(CyclabError, ValueError):
    """|g| <= |f| fails somewhere on the sampling grid."""

    def __init__(self, message: str, witness: complex) -> None:
        super().__init__(message)
        self.witness = witness


class OuterCheckError(CyclabError, ValueError):
    """A function required to be outer has zeros inside the disc."""


class FamilyDegenerateError(CyclabError, ValueError):
    """An exponent sweep has too few usable instances."""


class DivergenceError(CyclabError, ValueError):
    """A resolvent series was requested at a point where it diverges."""


class PreconditionError(CyclabError, ValueError):
    """Generic precondition failure."""


class ManifestError(CyclabError, ValueError):
    """An experiment manifest failed validation."""

    def __init__(self, message: str, field_path: str | None = None) -> None:
        super().__init__(message)
        self.field_path = field_path


class UnknownSuiteError(CyclabError, ValueError):
    """The requested suite id is not registered."""


class ExperimentError(CyclabError):
    """A computation failed inside the runner, with the experiment context attached."""

    def __init__(self, message: str, context: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.context = context or {}
