from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from awpoly.scalars import QContext, UsageError
from awpoly.sympoly import (SymLaurent, XPoly, f_basis, laurent_to_x,
                            u_coefficient_polys, x_to_laurent)


def test_xpoly_canonical_form():
    assert XPoly([1, 2, 0]).coeffs == [1, 2]
    assert XPoly([0, 0]).is_zero
    assert XPoly.zero().degree == -1
    assert XPoly.x().degree == 1
    assert XPoly.monomial(3, 5).coeffs == [0, 0, 0, 5]
    with pytest.raises(UsageError):
        XPoly.zero().lead


def test_xpoly_arithmetic():
    p = XPoly([1, 2, 3])
    q = XPoly([0, -2, -3])
    assert (p + q).coeffs == [1]
    assert (p - p).is_zero
    assert (p * XPoly([0, 1])).coeffs == [0, 1, 2, 3]
    assert (2 * p).coeffs == [2, 4, 6]
    assert (p / 2).coeffs == [F(1, 2), 1, F(3, 2)]
    assert (XPoly([1, 1]) ** 2).coeffs == [1, 2, 1]
    assert p(F(1, 2)) == F(11, 4)
    assert p.map(lambda c: c + 1).coeffs == [2, 3, 4]


def test_symlaurent_basics():
    L = SymLaurent({2: 1, 0: 0, -2: 1})
    assert L.support == [-2, 2]
    assert L.coeff(0) == 0
    assert L.is_symmetric()
    assert not SymLaurent({1: 1}).is_symmetric()
    assert L.substitute(F(1, 2)).coeffs == {2: F(1, 4), -2: 4}


def test_lift_of_x_squared():
    L = x_to_laurent(XPoly([0, 0, 1]))
    assert dict(L.coeffs) == {2: F(1, 4), 0: F(1, 2), -2: F(1, 4)}


@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=12),
                max_size=9))
def test_lift_roundtrip(coeffs):
    p = XPoly(coeffs)
    L = x_to_laurent(p)
    assert L.is_symmetric()
    assert laurent_to_x(L) == p


def test_laurent_to_x_rejects_asymmetric():
    with pytest.raises(UsageError):
        laurent_to_x(SymLaurent({1: 1}))


def test_f_basis_nodes():
    ctx = QContext(u=F(1, 2))
    assert f_basis(ctx, 0) == XPoly([1])
    # zeta_0 = (u^-1 + u)/2 = 5/4, zeta_1 = (u^-3 + u^3)/2 = 65/16
    assert f_basis(ctx, 1) == XPoly([-F(5, 4), 1])
    f2 = f_basis(ctx, 2)
    assert f2.lead == 1
    assert f2(F(5, 4)) == 0
    assert f2(F(65, 16)) == 0
    with pytest.raises(UsageError):
        f_basis(ctx, -1)


def test_u_coefficient_polys():
    ctx = QContext(q=F(1, 4))
    u1, u2 = u_coefficient_polys(ctx)
    s = F(9, 16)  # alpha_1^2 - 1 = (5/4)^2 - 1
    assert u1 == XPoly([0, s])
    assert u2 == XPoly([-s, 0, s])
