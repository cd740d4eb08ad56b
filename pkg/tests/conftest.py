from fractions import Fraction

import pytest

from archimedean_converse.arithmetic.scalars import LinForm
from archimedean_converse.converse.oracle import SearchBounds
from archimedean_converse.gamma.expr import GammaExpr

STANDARD_GRID = (0, Fraction(1, 2), 1, Fraction(3, 2), 2)


@pytest.fixture
def standard_bounds() -> SearchBounds:
    """maxN = 3 over the grid 0, 1/2, ..., 2."""
    return SearchBounds.create(3, STANDARD_GRID)


@pytest.fixture
def small_bounds() -> SearchBounds:
    return SearchBounds.create(1, (0, Fraction(1, 2)))


@pytest.fixture
def gamma_s() -> GammaExpr:
    """Γ(s)."""
    return GammaExpr.gamma(LinForm(1, 0))
