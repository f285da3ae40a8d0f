# this_file: tests/conftest.py
import pathlib

import pytest

from cyclab.polyrat import Poly, Rat, mate
from cyclab.spaces import DeBrangesRovnyak, Hardy, MeasureAtoms, WeightedDirichlet

HALF_PLUS_HALF_Z = Rat.from_poly(Poly((0.5, 0.5)))


@pytest.fixture(scope="session")
def hardy():
    return Hardy()


@pytest.fixture(scope="session")
def dirichlet():
    "The classical Dirichlet space D_0."
    return WeightedDirichlet(0.0)


@pytest.fixture(scope="session")
def half_mate():
    "Mate of b = (1 + z)/2, which is a = (1 - z)/2."
    return mate(HALF_PLUS_HALF_Z, n_max=256)


@pytest.fixture(scope="session")
def hb(half_mate):
    "H(b) for b = (1 + z)/2."
    return DeBrangesRovnyak(half_mate)


@pytest.fixture(scope="session")
def hz():
    "H(b) for b = z/2; the same functions as H^2 under an equivalent norm."
    return DeBrangesRovnyak.from_symbol(Rat.from_poly(Poly((0.0, 0.5))), n_max=64)


@pytest.fixture(scope="session")
def dirac_at_one():
    return MeasureAtoms.point_mass(1.0)


@pytest.fixture
def temp_path(tmpdir):
    return pathlib.Path(str(tmpdir))
