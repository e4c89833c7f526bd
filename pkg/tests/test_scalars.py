from fractions import Fraction as F

import pytest

from awpoly.scalars import (BackendMismatchError, QContext, UsageError,
                            exact_sqrt, gamma_alpha, parse_rational,
                            q_pochhammer, q_pochhammer_ratio, scalar_sqrt)


def test_parse_rational():
    assert parse_rational("3/7") == F(3, 7)
    assert parse_rational(" -2 ") == -2
    with pytest.raises(ValueError):
        parse_rational("x")


def test_exact_sqrt():
    assert exact_sqrt(F(1, 9)) == F(1, 3)
    assert exact_sqrt(F(49, 4)) == F(7, 2)
    assert isinstance(exact_sqrt(F(1, 2)), float)
    with pytest.raises(UsageError):
        exact_sqrt(F(-1, 4))


def test_scalar_sqrt_preserves_backend():
    assert scalar_sqrt(F(9, 16)) == F(3, 4)
    assert isinstance(scalar_sqrt(0.25), float)


def test_q_pochhammer_values():
    q = F(1, 4)
    assert q_pochhammer(F(1, 2), q, 0) == 1
    # (1 - 1/2)(1 - 1/8)
    assert q_pochhammer(F(1, 2), q, 2) == F(7, 16)
    with pytest.raises(UsageError):
        q_pochhammer(F(1, 2), q, -1)
    with pytest.raises(BackendMismatchError):
        q_pochhammer(0.5, q, 2)


def test_q_pochhammer_ratio_matches_quotient():
    q = F(1, 4)
    a = F(1, 3)
    for k in range(4):
        for n in range(k, 6):
            assert (q_pochhammer_ratio(a, q, k, n) * q_pochhammer(a, q, k)
                    == q_pochhammer(a, q, n))
    with pytest.raises(UsageError):
        q_pochhammer_ratio(a, q, 3, 2)


def test_q_pochhammer_ratio_survives_vanishing_prefix():
    # (1; q)_k = 0 for k >= 1, but the tail product from k on is nonzero
    q = F(1, 4)
    assert q_pochhammer(F(1), q, 2) == 0
    assert q_pochhammer_ratio(F(1), q, 1, 3) == (1 - q) * (1 - q * q)


def test_qcontext_from_u():
    ctx = QContext(u=F(1, 2))
    assert ctx.q == F(1, 16)
    assert ctx.sqrt_q == F(1, 4)
    assert ctx.u == F(1, 2)
    assert ctx.exact
    assert ctx.quarter_power(3) == F(1, 8)


def test_qcontext_from_q():
    ctx = QContext(q=F(1, 9))
    assert ctx.sqrt_q == F(1, 3)
    assert ctx.exact
    with pytest.raises(UsageError):
        ctx.quarter_power(1)
    inexact = QContext(q=F(1, 2))
    assert not inexact.exact


def test_qcontext_argument_checks():
    with pytest.raises(UsageError):
        QContext()
    with pytest.raises(UsageError):
        QContext(u=F(1, 2), q=F(1, 4))
    with pytest.raises(UsageError):
        QContext(u=F(-1, 2))
    with pytest.raises(UsageError):
        QContext(q=F(3, 2))
    assert QContext(q=F(9, 4), allow_q_ge_1=True).q == F(9, 4)


def test_alpha_gamma_values():
    ctx = QContext(q=F(1, 4))
    assert ctx.alpha(0) == 1
    assert ctx.gamma(0) == 0
    assert ctx.alpha(1) == F(5, 4)
    assert ctx.gamma(1) == 1
    assert ctx.alpha(2) == F(17, 8)
    assert ctx.gamma(2) == F(5, 2)
    assert gamma_alpha(ctx, 2) == (F(5, 2), F(17, 8))
    with pytest.raises(UsageError):
        gamma_alpha(ctx, -1)


def test_alpha_gamma_three_term_identities():
    ctx = QContext(u=F(1, 2))
    a1 = ctx.alpha1
    for n in range(1, 8):
        assert ctx.alpha(n + 1) + ctx.alpha(n - 1) == 2 * a1 * ctx.alpha(n)
        assert ctx.gamma(n + 1) + ctx.gamma(n - 1) == 2 * a1 * ctx.gamma(n)
