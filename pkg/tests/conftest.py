import math

import pytest

from eliashberg_tc import measure


@pytest.fixture
def einstein_unit():
    return measure.einstein(1.0)


@pytest.fixture
def einstein_varpi_one():
    """Single atom whose dimensionless frequency is one at T = 1/(2 pi)."""
    return measure.einstein(1.0), 1.0 / (2.0 * math.pi)


@pytest.fixture
def two_atoms():
    return measure.discrete([(0.5, 0.8), (0.5, 1.2)])


@pytest.fixture
def triangle():
    """Unit-mass triangular density peaked at 0.5, support [0, 1]."""
    return measure.tabulated([(0.0, 0.0), (0.5, 2.0), (1.0, 0.0)])
