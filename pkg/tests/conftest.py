from fractions import Fraction

import pytest

from awpoly.families import AWParams
from awpoly.scalars import QContext


@pytest.fixture
def ctx_u_half():
    return QContext(u=Fraction(1, 2))


@pytest.fixture
def params_std(ctx_u_half):
    return AWParams(Fraction(1, 2), Fraction(1, 3), Fraction(1, 5),
                    Fraction(1, 7), ctx_u_half)
