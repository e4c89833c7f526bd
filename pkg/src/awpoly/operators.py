"""The Askey-Wilson divided-difference operator D_q, the averaging operator
S_q, the translation T_nu, and verifiers for their product/composition rules.

Everything is computed in the Laurent domain: lift p to breve-p(z), shift
z -> q^(1/2) z, and (for D_q) divide exactly by (z - 1/z).  For lifts of
polynomials the division leaves no remainder; a nonzero remainder therefore
signals an internal defect, not a user error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import QContext, UsageError, is_exact
from .sympoly import (SymLaurent, XPoly, laurent_to_x, u_coefficient_polys,
                      x_to_laurent)


@dataclass
class OperatorResult:
    output: XPoly
    input_degree: int
    leading_ratio: object = None  # lead(out)/lead(in) when both are nonzero


def apply_Tnu(ctx: QContext, p: XPoly, nu: int) -> SymLaurent:
    """breve-p(q^(nu/2) z); generally asymmetric."""
    if nu not in (1, -1):
        raise UsageError("nu must be +1 or -1")
    return x_to_laurent(p).substitute(ctx.q_half_power(nu))


def _divide_by_z_minus_zinv(L: SymLaurent) -> SymLaurent:
    """Exact division of L by (z - 1/z), i.e. of L*z by (z^2 - 1)."""
    work = {k + 1: c for k, c in L.coeffs.items()}
    quot = {}
    if work:
        lo = min(work)
        for e in range(max(work), lo + 1, -1):
            c = work.get(e, 0)
            if c == 0:
                continue
            quot[e - 2] = quot.get(e - 2, 0) + c
            work[e - 2] = work.get(e - 2, 0) + c
            work[e] = 0
        rem = {e: c for e, c in work.items() if e < lo + 2 and c != 0}
    else:
        rem = {}
    if rem:
        exact = all(is_exact(c) for c in L.coeffs.values())
        if exact:
            raise AssertionError(f"nonzero remainder in Laurent division: {rem}")
        scale = max((abs(c) for c in L.coeffs.values()), default=0)
        if any(abs(c) > 1e-9 * max(scale, 1) for c in rem.values()):
            raise AssertionError(f"nonzero remainder in Laurent division: {rem}")
    return SymLaurent(quot)


def _resymmetrize(L: SymLaurent) -> SymLaurent:
    """Average tiny float asymmetry away; exact inputs must already be symmetric."""
    if L.is_symmetric():
        return L
    if all(is_exact(c) for c in L.coeffs.values()):
        raise AssertionError("operator output lost z <-> 1/z symmetry")
    keys = set(L.coeffs) | {-k for k in L.coeffs}
    return SymLaurent({k: (L.coeff(k) + L.coeff(-k)) / 2 for k in keys})


def apply_Dq(ctx: QContext, p: XPoly) -> OperatorResult:
    """D_q p: degree drops by one, leading coefficient picks up gamma_n."""
    n = p.degree
    if n <= 0:
        return OperatorResult(XPoly.zero(), n, None)
    lifted = x_to_laurent(p)
    num = lifted.substitute(ctx.sqrt_q) - lifted.substitute(1 / ctx.sqrt_q)
    den_const = (ctx.sqrt_q - 1 / ctx.sqrt_q) / 2
    quot = _divide_by_z_minus_zinv(num) / den_const
    out = laurent_to_x(_resymmetrize(quot))
    ratio = out.lead / p.lead if not out.is_zero else None
    return OperatorResult(out, n, ratio)


def dq(ctx: QContext, p: XPoly) -> XPoly:
    return apply_Dq(ctx, p).output


def dq2(ctx: QContext, p: XPoly) -> XPoly:
    return dq(ctx, dq(ctx, p))


def apply_Sq(ctx: QContext, p: XPoly) -> XPoly:
    """S_q p = (breve-p(q^(1/2)z) + breve-p(q^(-1/2)z))/2, back in x."""
    if p.is_zero:
        return XPoly.zero()
    lifted = x_to_laurent(p)
    avg = (lifted.substitute(ctx.sqrt_q) + lifted.substitute(1 / ctx.sqrt_q)) / 2
    return laurent_to_x(_resymmetrize(avg))


def sq(ctx: QContext, p: XPoly) -> XPoly:
    return apply_Sq(ctx, p)


IDENTITY_KINDS = ("product-D", "product-S", "compose-DS", "compose-SS")


def verify_identity(ctx: QContext, kind: str, f: XPoly, g: XPoly | None = None) -> XPoly:
    """Residual (LHS - RHS) of one of the four operator rules.

    product-D:   D(fg) = S(f)D(g) + D(f)S(g)
    product-S:   S(fg) = S(f)S(g) + U_2 D(f)D(g)
    compose-DS:  D S f = alpha S D f + U_1 D^2 f
    compose-SS:  S^2 f = U_1 S D f + alpha U_2 D^2 f + f

    Exact backends must return the zero polynomial.
    """
    u1, u2 = u_coefficient_polys(ctx)
    alpha = ctx.alpha1
    if kind in ("product-D", "product-S"):
        if g is None:
            raise UsageError(f"{kind} needs two polynomials")
        if kind == "product-D":
            lhs = dq(ctx, f * g)
            rhs = sq(ctx, f) * dq(ctx, g) + dq(ctx, f) * sq(ctx, g)
        else:
            lhs = sq(ctx, f * g)
            rhs = sq(ctx, f) * sq(ctx, g) + u2 * (dq(ctx, f) * dq(ctx, g))
        return lhs - rhs
    if kind == "compose-DS":
        lhs = dq(ctx, sq(ctx, f))
        rhs = alpha * sq(ctx, dq(ctx, f)) + u1 * dq2(ctx, f)
        return lhs - rhs
    if kind == "compose-SS":
        lhs = sq(ctx, sq(ctx, f))
        rhs = u1 * sq(ctx, dq(ctx, f)) + alpha * (u2 * dq2(ctx, f)) + f
        return lhs - rhs
    raise UsageError(f"unknown identity kind {kind!r}; expected one of {IDENTITY_KINDS}")
