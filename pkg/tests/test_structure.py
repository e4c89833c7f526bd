from fractions import Fraction as F

import pytest

from awpoly.families import aw_monic, extract_recurrence, family_from_recurrence
from awpoly.scalars import UsageError
from awpoly.structure import (SingularDenominatorError, band_profile,
                              contiguous_k, dde_data, expand_in_d2_basis,
                              k_value, koornwinder_L, koornwinder_xi, pi_poly,
                              structure_coefficients, verify_contiguous,
                              verify_dde, verify_koornwinder,
                              verify_structure_relation)
from awpoly.sympoly import XPoly


def test_dde_residual_zero(params_std):
    for n in range(6):
        assert verify_dde(params_std, n).is_zero


def test_p1_equals_minus_psi_over_lambda1(params_std):
    data = dde_data(params_std)
    assert aw_monic(params_std, 1) == -(data.psi / data.lam(1))


def test_pi_factors_over_parameter_nodes(params_std):
    pi, factored = pi_poly(params_std)
    assert factored
    assert pi.degree == 4
    for t in params_std.params:
        assert pi((t + 1 / t) / 2) == 0


def test_contiguous_relations(params_std):
    for n in range(4):
        for slot in "abcd":
            assert verify_contiguous(params_std, n, slot).is_zero


def test_contiguous_slot_checks(params_std):
    with pytest.raises(UsageError):
        contiguous_k(params_std, 2, "e")


def test_k_value_singular_denominator(ctx_u_half):
    with pytest.raises(SingularDenominatorError):
        k_value(0, F(1), F(1), F(1), F(1), ctx_u_half)


def test_structure_relation(params_std):
    for n in range(2, 5):
        assert verify_structure_relation(params_std, n).is_zero
    with pytest.raises(UsageError):
        structure_coefficients(params_std, 1)


def test_outer_band_values(params_std):
    ctx = params_std.ctx
    for n in (2, 3, 4):
        coeffs = structure_coefficients(params_std, n)
        assert coeffs[2] == 16 * params_std.abcd * ctx.gamma(n) * ctx.gamma(n - 1)


def test_band_profile_matches_structure(params_std):
    ctx = params_std.ctx
    n = 4
    pi, _ = pi_poly(params_std)
    family = [aw_monic(params_std, k) for k in range(n + 3)]
    profile = band_profile(family, pi, n, ctx)
    assert all(c == 0 for c in profile[:n - 2])
    coeffs = structure_coefficients(params_std, n)
    for j in range(-2, 3):
        assert profile[n + j] == coeffs[j]


def test_band_profile_degree_check(params_std):
    pi, _ = pi_poly(params_std)
    family = [XPoly([1])] * 6
    with pytest.raises(UsageError):
        band_profile(family, pi, 3, params_std.ctx)


def test_perturbed_family_breaks_band(params_std):
    rc = extract_recurrence(params_std, 8)
    b_seq = list(rc.b_seq)
    b_seq[2] += F(1, 10)
    perturbed = family_from_recurrence(
        type(rc)(rc.a_seq, b_seq, "perturbed"), 8)
    pi, _ = pi_poly(params_std)
    profile = band_profile(perturbed, pi, 6, params_std.ctx)
    assert any(c != 0 for c in profile[:4])


def test_expansion_proposition(params_std):
    ctx = params_std.ctx
    for n in (4, 5):
        coeffs = expand_in_d2_basis(params_std, n)
        assert all(coeffs[k] == 0 for k in range(2, n - 2))
        assert coeffs[n + 2] == 1 / (ctx.gamma(n + 2) * ctx.gamma(n + 1))
    with pytest.raises(UsageError):
        expand_in_d2_basis(params_std, 3)


def test_koornwinder_xi(ctx_u_half):
    q = ctx_u_half.q
    assert koornwinder_xi(ctx_u_half) == (1 - q * q) / (2 * q)


def test_koornwinder_residual_zero(params_std):
    for n in range(4):
        assert verify_koornwinder(params_std, n).is_zero


def test_koornwinder_L_on_constants(params_std):
    # D_q kills constants and S_q fixes them, so L c = xi psi c
    data = dde_data(params_std)
    xi = koornwinder_xi(params_std.ctx)
    assert koornwinder_L(params_std, XPoly([3])) == 3 * xi * data.psi
    p = aw_monic(params_std, 3)
    assert koornwinder_L(params_std, p).degree == 4
