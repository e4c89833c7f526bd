"""Characterizing data of the Askey-Wilson family: the divided-difference
equation (phi, psi, lambda_n), the quartic pi, contiguous coefficients k_n,
the five-band structure relation, basis expansions, and the Koornwinder
operator L.

Every verifier returns a residual polynomial; in the exact backend a correct
run returns the zero polynomial, with no tolerance involved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import AWParams, aw_monic
from .operators import dq, dq2, sq
from .scalars import UsageError
from .sympoly import XPoly, u_coefficient_polys


class SingularDenominatorError(ZeroDivisionError):
    """A k_n or lambda_n denominator vanished: abcd q^m = 1."""


@dataclass
class DDEData:
    """Coefficients of phi D_q^2 P_n + psi S_q D_q P_n + lambda_n P_n = 0."""

    phi: XPoly
    psi: XPoly
    lam: object  # n -> scalar


@dataclass
class StructureCoeffs:
    """Five-band coefficients a_{n,n+j}, j = -2..2, for one n."""

    n: int
    band: dict  # j -> scalar

    def __getitem__(self, j):
        return self.band[j]


def dde_data(params: AWParams) -> DDEData:
    a, b, c, d = params.params
    q = params.ctx.q
    sqrt_q = params.ctx.sqrt_q
    if q == 1:
        raise UsageError("q = 1 is outside the operator regime")
    abcd = params.abcd
    e1 = a + b + c + d
    e2 = a * b + a * c + a * d + b * c + b * d + c * d
    e3 = a * b * c + a * b * d + a * c * d + b * c * d
    phi = XPoly([e2 - abcd - 1, -(e3 + e1), 2 * (abcd + 1)])
    psi = XPoly([2 * sqrt_q * (e1 - e3) / (q - 1),
                 4 * sqrt_q * (abcd - 1) / (q - 1)])

    def lam(n: int):
        qn = q ** n
        return -4 * sqrt_q * (qn - 1) * (qn * abcd - q) / ((q - 1) ** 2 * qn)

    return DDEData(phi, psi, lam)


def pi_poly(params: AWParams):
    """pi = phi^2 - U_2 psi^2 and its 16abcd-factored quartic form.

    Returns (pi, factored_check); the check is exact equality of the two
    routes, which pins the multiplicative normalization of phi and psi.
    """
    data = dde_data(params)
    _, u2 = u_coefficient_polys(params.ctx)
    pi = data.phi * data.phi - u2 * (data.psi * data.psi)
    factored = XPoly([16 * params.abcd])
    for t in params.params:
        factored = factored * XPoly([-(t + 1 / t) / 2, 1])
    return pi, pi == factored


def k_value(n: int, p1, p2, p3, p4, ctx):
    """Contiguous coefficient k_n for the parameter tuple (p1,p2,p3,p4);
    p1 plays the shifted role, and the formula is symmetric in p2,p3,p4.
    """
    q = ctx.q
    qn = q ** n
    prod4 = p1 * p2 * p3 * p4
    den = 2 * p1 * (1 - prod4 * qn ** 2 / q) * (1 - prod4 * qn ** 2)
    if den == 0:
        raise SingularDenominatorError("k_n denominator vanished (abcd q^m = 1)")
    num = ((1 - p1 * p2 * qn) * (1 - p1 * p3 * qn) * (1 - p1 * p4 * qn)
           * (1 - prod4 * qn / q))
    return -num / den


_SLOTS = {"a": (0, 1, 2, 3), "b": (1, 0, 2, 3), "c": (2, 1, 0, 3), "d": (3, 1, 2, 0)}


def contiguous_k(params: AWParams, n: int, slot: str):
    """k_n for the four slot permutations: 'a' -> (a,b,c,d), 'b' -> (b,a,c,d),
    'c' -> (c,b,a,d), 'd' -> (d,b,c,a)."""
    if slot not in _SLOTS:
        raise UsageError(f"slot must be one of {sorted(_SLOTS)}")
    p = params.params
    i, j, k, l = _SLOTS[slot]
    return k_value(n, p[i], p[j], p[k], p[l], params.ctx)


def verify_contiguous(params: AWParams, n: int, slot: str) -> XPoly:
    """Residual of (x - (t + 1/t)/2) P_n(shifted) - P_{n+1} - k_n P_n,
    where the slot parameter t is replaced by t*q on the left."""
    t = getattr(params, slot)
    shifted = params.with_params(**{slot: t * params.ctx.q})
    lhs = XPoly([-(t + 1 / t) / 2, 1]) * aw_monic(shifted, n)
    rhs = aw_monic(params, n + 1) + contiguous_k(params, n, slot) * aw_monic(params, n)
    return lhs - rhs


def _stage_tuples(params: AWParams):
    a, b, c, d = params.params
    q = params.ctx.q
    return [(a, b * q, c * q, d * q),
            (b, a, c * q, d * q),
            (c, b, a, d * q),
            (d, b, c, a)]


def structure_coefficients(params: AWParams, n: int) -> StructureCoeffs:
    """The five a_{n,n+j} via products of contiguous k's.

    Walks the four contiguous relations that peel the quartic pi off
    P_{n-2}(x; aq,bq,cq,dq): at each stage the index either steps up (raising
    the target degree) or stays, contributing the stage's k at the current
    index.  The resulting path sums are the closed-form band coefficients,
    with a_{n,n+2} = 16abcd gamma_n gamma_{n-1}.
    """
    if n < 2:
        raise UsageError("structure coefficients need n >= 2")
    ctx = params.ctx
    state = {n - 2: ctx.one}
    for p1, p2, p3, p4 in _stage_tuples(params):
        nxt = {}
        for m, w in state.items():
            nxt[m + 1] = nxt.get(m + 1, ctx.zero) + w
            nxt[m] = nxt.get(m, ctx.zero) + w * k_value(m, p1, p2, p3, p4, ctx)
        state = nxt
    scale = 16 * params.abcd * ctx.gamma(n) * ctx.gamma(n - 1)
    band = {j: scale * state[n + j] for j in range(-2, 3)}
    return StructureCoeffs(n, band)


def verify_structure_relation(params: AWParams, n: int) -> XPoly:
    """Residual of pi D_q^2 P_n - sum_j a_{n,n+j} P_{n+j}."""
    pi, _ = pi_poly(params)
    coeffs = structure_coefficients(params, n)
    lhs = pi * dq2(params.ctx, aw_monic(params, n))
    rhs = XPoly.zero()
    for j in range(-2, 3):
        rhs = rhs + coeffs[j] * aw_monic(params, n + j)
    return lhs - rhs


def verify_dde(params: AWParams, n: int) -> XPoly:
    """Residual of phi D_q^2 P_n + psi S_q D_q P_n + lambda_n P_n."""
    data = dde_data(params)
    ctx = params.ctx
    p = aw_monic(params, n)
    return data.phi * dq2(ctx, p) + data.psi * sq(ctx, dq(ctx, p)) + data.lam(n) * p


def band_profile(family, pi: XPoly, n: int, ctx) -> list:
    """Coefficients of pi D_q^2 P_n expanded in the monic basis {P_0..P_{n+2}}.

    family must contain monic polynomials P_0..P_{n+2} with deg P_k = k.
    For a true Askey-Wilson family the entries below index n-2 vanish.
    """
    if any(family[k].degree != k for k in range(n + 3)):
        raise UsageError("band_profile needs deg P_k = k for k <= n+2")
    g = pi * dq2(ctx, family[n])
    out = [None] * (n + 3)
    for k in range(n + 2, -1, -1):
        c = g.coeff(k) / family[k].lead
        out[k] = c
        if c != 0:
            g = g - c * family[k]
    if not g.is_zero:
        raise AssertionError("band_profile elimination left a residual")
    return out


def expand_in_d2_basis(params: AWParams, n: int) -> dict:
    """Expand P_n in {D_q^2 P_k}, k = 2..n+2, by descending-degree elimination.

    Returns {k: b_{n,k}}; entries with 2 <= k < n-2 are asserted zero in the
    exact backend and omitted from the result only if you slice it yourself.
    """
    if n < 4:
        raise UsageError("expansion proposition needs n >= 4")
    ctx = params.ctx
    g = aw_monic(params, n)
    out = {}
    for k in range(n + 2, 1, -1):
        lead = ctx.gamma(k) * ctx.gamma(k - 1)
        b = g.coeff(k - 2) / lead
        out[k] = b
        if b != 0:
            g = g - b * dq2(ctx, aw_monic(params, k))
    if not g.is_zero:
        raise AssertionError("d2-basis elimination left a residual")
    return out


def koornwinder_xi(ctx):
    q = ctx.q
    return (1 - q * q) / (2 * q)


def koornwinder_L(params: AWParams, p: XPoly) -> XPoly:
    """L p = xi (2 phi D_q S_q p + 2 psi S_q^2 p - psi p), xi = (1-q^2)/(2q)."""
    data = dde_data(params)
    ctx = params.ctx
    xi = koornwinder_xi(ctx)
    term = (2 * (data.phi * dq(ctx, sq(ctx, p)))
            + 2 * (data.psi * sq(ctx, sq(ctx, p)))
            - data.psi * p)
    return xi * term


def verify_koornwinder(params: AWParams, n: int) -> XPoly:
    """Residual of the identity connecting L to the structure relation:

    psi (L P_n) = -2 alpha xi pi D_q^2 P_n
                  + xi (psi^2 - 2 lambda_n (alpha phi + U_1 psi)) P_n.

    This is the composition form of L combined with the operator rules
    and the divided-difference equation; exact backends must return zero.
    """
    data = dde_data(params)
    ctx = params.ctx
    u1, _ = u_coefficient_polys(ctx)
    alpha = ctx.alpha1
    xi = koornwinder_xi(ctx)
    pi, _ = pi_poly(params)
    p = aw_monic(params, n)
    lhs = data.psi * koornwinder_L(params, p)
    rhs = (-2 * alpha * xi) * (pi * dq2(ctx, p))
    rhs = rhs + xi * ((data.psi * data.psi
                       - 2 * data.lam(n) * (alpha * data.phi + u1 * data.psi)) * p)
    return lhs - rhs
