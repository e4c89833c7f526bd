"""Construction of Askey-Wilson polynomials and related families.

The series form is implemented in cleared (denominator-free) shape: every
q-Pochhammer ratio (e;q)_n/(e;q)_k is expanded as the product over indices
k..n-1, so parameter choices with (ab;q)_k = 0 still work.  Recurrence
coefficients are extracted from the polynomials themselves rather than
transcribed from a reference table; the extraction doubles as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import (QContext, UsageError, is_exact, q_pochhammer,
                      q_pochhammer_ratio)
from .sympoly import XPoly


class DegenerateNormalizationError(ValueError):
    """abcd q^m hit 1 where a formula needs it nonzero."""


class PositivityViolationError(ValueError):
    """b_n <= 0 appeared for parameters inside the admissible region."""


@dataclass
class AWParams:
    """The tuple (a, b, c, d) together with its q-context."""

    a: object
    b: object
    c: object
    d: object
    ctx: QContext
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def abcd(self):
        return self.a * self.b * self.c * self.d

    @property
    def params(self):
        return (self.a, self.b, self.c, self.d)

    @property
    def admissible(self) -> bool:
        """True in the default positivity regime 0 < a,b,c,d < 1 (real)."""
        try:
            return all(0 < t < 1 for t in self.params) and 0 < self.ctx.q < 1
        except TypeError:
            return False

    def check_nondegenerate(self, n: int):
        """Guard abcd*q^m != 1 for the powers m used up to degree n."""
        power = self.abcd / self.ctx.q
        for _ in range(2 * n + 2):
            if power == 1:
                raise DegenerateNormalizationError("abcd*q^m = 1 in working range")
            power *= self.ctx.q

    def with_params(self, a=None, b=None, c=None, d=None) -> "AWParams":
        return AWParams(a if a is not None else self.a,
                        b if b is not None else self.b,
                        c if c is not None else self.c,
                        d if d is not None else self.d,
                        self.ctx)

    def shifted_sqrt_q(self) -> "AWParams":
        """All four parameters multiplied by q^(1/2) (the D_q shift)."""
        s = self.ctx.sqrt_q
        return AWParams(self.a * s, self.b * s, self.c * s, self.d * s, self.ctx)

    def shifted_q(self) -> "AWParams":
        q = self.ctx.q
        return AWParams(self.a * q, self.b * q, self.c * q, self.d * q, self.ctx)


@dataclass
class RecurrenceCoeffs:
    """Monic three-term recurrence data: P_{n+1} = (x - a_n) P_n - b_n P_{n-1}.

    a_seq holds a_0..a_N; b_seq holds b_1..b_N (b_0 is irrelevant).
    """

    a_seq: list
    b_seq: list
    provenance: str = "extracted-from-series"

    def a(self, n: int):
        return self.a_seq[n]

    def b(self, n: int):
        if n < 1:
            raise UsageError("b_n is defined for n >= 1")
        return self.b_seq[n - 1]

    @property
    def order(self) -> int:
        return len(self.a_seq) - 1


def aw_series_poly(params: AWParams, n: int) -> XPoly:
    """p_n(x; a,b,c,d | q) of degree n, leading coefficient 2^n (abcd q^(n-1); q)_n."""
    if n < 0:
        raise UsageError("degree must be >= 0")
    key = ("series", n)
    if key in params._cache:
        return params._cache[key]
    a, b, c, d = params.params
    q = params.ctx.q
    one = params.ctx.one
    if n > 0 and a == 0:
        raise UsageError("series form needs a != 0 (permute parameters)")
    qmn = q ** (-n)
    total = XPoly.zero()
    base = XPoly([one])  # prod_{j<k} (1 - 2 a q^j x + a^2 q^(2j))
    coef = one
    for k in range(n + 1):
        tail = (q_pochhammer_ratio(a * b, q, k, n)
                * q_pochhammer_ratio(a * c, q, k, n)
                * q_pochhammer_ratio(a * d, q, k, n))
        total = total + (coef * tail) * base
        # update from k to k+1
        coef *= (1 - qmn * q ** k) * (1 - a * b * c * d * q ** (n - 1 + k)) * q
        coef /= 1 - q ** (k + 1)
        base = base * XPoly([one + a * a * q ** (2 * k), -2 * a * q ** k])
    return _cache_put(params, key, total * a ** (-n))


def _cache_put(params: AWParams, key, value):
    params._cache[key] = value
    return value


def aw_leading_normalization(params: AWParams, n: int):
    """2^n (abcd q^(n-1); q)_n, the leading coefficient of p_n."""
    q = params.ctx.q
    return 2 ** n * q_pochhammer(params.abcd * q ** (n - 1), q, n)


def aw_monic(params: AWParams, n: int) -> XPoly:
    """Monic P_n = p_n / (2^n (abcd q^(n-1); q)_n)."""
    key = ("monic", n)
    if key in params._cache:
        return params._cache[key]
    norm = aw_leading_normalization(params, n)
    if norm == 0:
        raise DegenerateNormalizationError(
            f"monic normalization vanishes at n={n}: abcd*q^m = 1")
    return _cache_put(params, key, aw_series_poly(params, n) / norm)


def extract_recurrence(params: AWParams, N: int, tol=None) -> RecurrenceCoeffs:
    """Solve x P_n = P_{n+1} + a_n P_n + b_n P_{n-1} for a_n, b_n, n <= N.

    The full coefficient identity is asserted, not just the two leading
    equations; in the exact backend any residual is an internal defect.
    In the float backend pass tol to bound the allowed residual.
    """
    if N < 1:
        raise UsageError("extract_recurrence needs N >= 1")
    polys = [aw_monic(params, k) for k in range(N + 2)]
    x = XPoly.x()
    a_seq, b_seq = [], []
    for n in range(N + 1):
        r = x * polys[n] - polys[n + 1]
        a_n = r.coeff(n)
        r = r - a_n * polys[n]
        a_seq.append(a_n)
        if n >= 1:
            b_n = r.coeff(n - 1)
            r = r - b_n * polys[n - 1]
            b_seq.append(b_n)
        _assert_small(r, tol, "three-term recurrence identity failed")
    if params.admissible:
        for i, b_n in enumerate(b_seq, start=1):
            if not b_n > 0:
                raise PositivityViolationError(
                    f"b_{i} = {b_n} is not positive in the admissible region")
    return RecurrenceCoeffs(a_seq, b_seq, provenance="extracted-from-series")


def _assert_small(r: XPoly, tol, message: str):
    if r.is_zero:
        return
    if all(is_exact(cc) for cc in r.coeffs):
        raise AssertionError(f"{message}: residual {r!r}")
    bound = tol if tol is not None else 1e-8
    if any(abs(cc) > bound for cc in r.coeffs):
        raise AssertionError(f"{message}: residual {r!r}")


def monic_from_recurrence(rc: RecurrenceCoeffs, n: int) -> XPoly:
    """Regenerate P_n from recurrence data (the oracle for aw_monic)."""
    if n > rc.order + 1:
        raise UsageError("recurrence data too short")
    p_prev, p = XPoly.zero(), XPoly([1])
    x = XPoly.x()
    for k in range(n):
        nxt = (x - rc.a(k)) * p - (rc.b(k) * p_prev if k >= 1 else XPoly.zero())
        p_prev, p = p, nxt
    return p


def family_from_recurrence(rc: RecurrenceCoeffs, N: int) -> list:
    """P_0..P_N generated from recurrence data."""
    polys = [XPoly([1])]
    if N >= 1:
        x = XPoly.x()
        polys.append(x - rc.a(0))
        for k in range(1, N):
            polys.append((x - rc.a(k)) * polys[k] - rc.b(k) * polys[k - 1])
    return polys[:N + 1]


def cdqhahn_recurrence_coeffs(a, b, c, ctx: QContext, n: int):
    """(a~_n, b~_n) of the continuous dual q-Hahn recurrence in base q.

    b~_n carries the denominator (2abc q^(2n))^2, the square of a~_n's;
    this is pinned by the exact limit identity with the cleared series
    (see cdqhahn_limit_sum), which fails under a factor-2 misnormalization.
    """
    q = ctx.q
    qn = q ** n
    at = (a * b * qn + a * c * qn + b * c * qn + qn * q - q - 1) / (2 * a * c * qn ** 2 * b)
    bt = ((qn - 1) * (b * c * qn - q) * (a * c * qn - q) * (a * b * qn - q)
          / (4 * a ** 2 * c ** 2 * qn ** 4 * b ** 2))
    return at, bt


def cdqhahn_poly(a, b, c, ctx: QContext, n: int) -> XPoly:
    """Monic q_n(x; a,b,c | q) built from its three-term recurrence."""
    if a == 0 or b == 0 or c == 0:
        raise UsageError("cdqhahn_poly needs nonzero a, b, c")
    p_prev, p = XPoly.zero(), XPoly([1])
    x = XPoly.x()
    for k in range(n):
        at, bt = cdqhahn_recurrence_coeffs(a, b, c, ctx, k)
        nxt = (x - at) * p - bt * p_prev
        p_prev, p = p, nxt
    return p


def cdqhahn_limit_sum(a, b, c, ctx: QContext, n: int) -> XPoly:
    """The d -> infinity limit of a^n p_n / ((ab,ac,ad;q)_n), summed exactly:

        sum_k (q^-n;q)_k (b c q^n)^k / ((ab;q)_k (ac;q)_k (q;q)_k)
              * prod_{j<k} (1 - 2 a q^j x + a^2 q^(2j))

    Equals (2abc)^n q^(n(n-1)) q_n(x;a,b,c|q) / ((ab;q)_n (ac;q)_n).
    """
    q = ctx.q
    one = ctx.one
    total = XPoly.zero()
    base = XPoly([one])
    coef = one
    qmn = q ** (-n)
    for k in range(n + 1):
        total = total + coef * base
        coef *= (1 - qmn * q ** k) * (b * c * q ** n)
        coef /= (1 - a * b * q ** k) * (1 - a * c * q ** k) * (1 - q ** (k + 1))
        base = base * XPoly([one + a * a * q ** (2 * k), -2 * a * q ** k])
    return total


LIMIT_KINDS = ("continuous-dual-q-Hahn", "Al-Salam-Chihara",
               "continuous-big-q-Hermite", "continuous-q-Hermite")


def limit_scaled_poly(kind: str, surviving, ctx: QContext, n: int, big) -> XPoly:
    """The scaled Askey-Wilson expression at a large value of the diverging
    parameter(s), normalized so the family limit exists coefficientwise."""
    q = ctx.q
    if kind == "continuous-dual-q-Hahn":
        a, b, c = surviving
        params = AWParams(a, b, c, big, ctx)
        return aw_series_poly(params, n) / q_pochhammer(a * big, q, n)
    if kind == "Al-Salam-Chihara":
        a, b = surviving
        params = AWParams(a, b, big, big, ctx)
        scale = q_pochhammer(a * big, q, n) ** 2
        return (a ** n) * aw_series_poly(params, n) / scale
    if kind == "continuous-big-q-Hermite":
        (a,) = surviving
        params = AWParams(a, big, big, big, ctx)
        scale = q_pochhammer(a * big, q, n) ** 3
        return (a ** n) * aw_series_poly(params, n) / scale
    if kind == "continuous-q-Hermite":
        params = AWParams(big, big, big, big, ctx)
        scale = q_pochhammer(big * big, q, n) ** 3
        return (big ** (2 * n)) * aw_series_poly(params, n) / scale
    raise UsageError(f"unknown limit kind {kind!r}; expected one of {LIMIT_KINDS}")


def limit_family_eval(kind: str, surviving, ctx: QContext, n: int, d_large):
    """Scaled polynomial at the large parameter, plus a convergence diagnostic.

    The deviation is the max abs coefficient gap between the evaluations at
    d_large and 10*d_large.
    """
    p1 = limit_scaled_poly(kind, surviving, ctx, n, d_large)
    p2 = limit_scaled_poly(kind, surviving, ctx, n, 10 * d_large)
    diff = p1 - p2
    deviation = max((abs(cc) for cc in diff.coeffs), default=0.0)
    return p2, deviation


def poly_deviation(p: XPoly, target: XPoly):
    """Max abs coefficient gap between two polynomials."""
    diff = p - target
    return max((abs(cc) for cc in diff.coeffs), default=0)
