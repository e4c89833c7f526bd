"""Zero isolation for monic orthogonal families and the extreme-zero bounds.

Zeros come from two independent routes: sign-change counting of the
recurrence-evaluated sequence (P_0(x),...,P_n(x)) with bisection, and the
eigenvalues of the symmetric tridiagonal (Jacobi) matrix.  Bounds for the
extreme zeros come from the closed forms and, as a cross-check, from the
roots of the quadratic G_{2,n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .families import AWParams, RecurrenceCoeffs, extract_recurrence
from .scalars import UsageError, is_exact


class ComplexBoundsError(ValueError):
    """The discriminant went negative: no real bounds at this index."""


class SingularBoundError(ZeroDivisionError):
    """A bound-formula denominator vanished."""


@dataclass
class ZeroSet:
    values: list  # ascending
    n: int
    method: str  # "sturm-bisection" | "tridiagonal-eigen"
    certified_interval: tuple = (-1.0, 1.0)


@dataclass
class BoundPair:
    upper_on_smallest: object
    lower_on_largest: object
    I_n: object
    A: object
    B: object
    C: object


def _sign_changes(rc: RecurrenceCoeffs, n: int, x):
    """Sign changes in (P_0(x),...,P_n(x)) = number of zeros of P_n above x.

    A zero entry takes the sign opposite its predecessor (deterministic
    tie-break; P_0 = 1 anchors the chain).
    """
    prev_sign = 1
    changes = 0
    p_prev, p = None, x * 0 + 1
    for k in range(n):
        nxt = (x - rc.a(k)) * p - (rc.b(k) * p_prev if k >= 1 else 0)
        p_prev, p = p, nxt
        s = 1 if p > 0 else (-1 if p < 0 else -prev_sign)
        if s != prev_sign:
            changes += 1
        prev_sign = s
    return changes


def _bracket(rc: RecurrenceCoeffs, n: int):
    """Gershgorin-style enclosure of the Jacobi-matrix spectrum."""
    roots_b = [mpmath.sqrt(rc.b(k)) if not is_exact(rc.b(k)) or rc.b(k) >= 0
               else (_ for _ in ()).throw(UsageError("negative b_k"))
               for k in range(1, n)]
    lo = hi = rc.a(0)
    for k in range(n):
        left = roots_b[k - 1] if k >= 1 else 0
        right = roots_b[k] if k < n - 1 else 0
        lo = min(lo, rc.a(k) - left - right)
        hi = max(hi, rc.a(k) + left + right)
    return lo - 1, hi + 1


def zeros_sturm(coeffs: RecurrenceCoeffs, n: int, tol: float = 1e-12,
                precision: int | None = None) -> ZeroSet:
    """All n zeros of P_n, each bracketed to width <= tol by bisection on
    the sign-change count."""
    if n < 1:
        raise UsageError("zeros_sturm needs n >= 1")
    if coeffs.order + 1 < n or len(coeffs.b_seq) < n - 1:
        raise UsageError("recurrence data too short for degree n")
    for k in range(1, n):
        if not coeffs.b(k) > 0:
            raise UsageError(f"b_{k} must be positive for zero isolation")
    if tol <= 0:
        raise UsageError("tol must be positive")

    def isolate():
        rc = _to_working(coeffs, precision)
        lo0, hi0 = _bracket(rc, n)
        if _sign_changes(rc, n, lo0) != n or _sign_changes(rc, n, hi0) != 0:
            raise ArithmeticError(
                f"bracket failure: counts {_sign_changes(rc, n, lo0)}/"
                f"{_sign_changes(rc, n, hi0)} at [{lo0}, {hi0}]")
        out = []
        for k in range(1, n + 1):
            lo, hi = lo0, hi0
            # invariant: count(lo) >= n-k+1 > count(hi'), target zero in (lo, hi]
            while hi - lo > tol:
                mid = (lo + hi) / 2
                if _sign_changes(rc, n, mid) >= n - k + 1:
                    lo = mid
                else:
                    hi = mid
            out.append((lo + hi) / 2)
        return out

    if precision is not None and precision > 53:
        with mpmath.workprec(precision):
            values = [float(v) if tol >= 1e-15 else v for v in isolate()]
    else:
        values = isolate()
    return ZeroSet([float(v) for v in values], n, "sturm-bisection")


def _to_working(rc: RecurrenceCoeffs, precision):
    if precision is not None and precision > 53:
        conv = lambda v: mpmath.mpf(v.numerator) / v.denominator if isinstance(v, Fraction) else mpmath.mpf(v)
        return RecurrenceCoeffs([conv(v) for v in rc.a_seq],
                                [conv(v) for v in rc.b_seq], rc.provenance)
    return RecurrenceCoeffs([float(v) for v in rc.a_seq],
                            [float(v) for v in rc.b_seq], rc.provenance)


def zeros_tridiagonal(coeffs: RecurrenceCoeffs, n: int) -> ZeroSet:
    """Zeros as eigenvalues of the Jacobi matrix (diag a_k, off-diag sqrt(b_k))."""
    if n < 1:
        raise UsageError("zeros_tridiagonal needs n >= 1")
    diag = np.array([float(coeffs.a(k)) for k in range(n)])
    off = np.array([float(coeffs.b(k)) ** 0.5 for k in range(1, n)])
    m = np.diag(diag)
    if n > 1:
        m += np.diag(off, 1) + np.diag(off, -1)
    vals = np.linalg.eigvalsh(m)
    return ZeroSet([float(v) for v in np.sort(vals)], n, "tridiagonal-eigen")


def _abc_elementary(params: AWParams):
    b, c, d = params.b, params.c, params.d
    A = b * c + b * d + c * d
    B = b + c + d
    C = b * c * d
    return A, B, C


def bound_discriminant(params: AWParams, n: int):
    """The closed-form discriminant I_n of the extreme-zero bounds."""
    a = params.a
    q = params.ctx.q
    A, B, C = _abc_elementary(params)
    b, c, d = params.b, params.c, params.d
    qn1 = q ** (n - 1)
    f1 = a * C * q ** (2 * n - 2) - 1
    f2 = a * C * qn1 - 1
    bracket = ((-q ** (3 * n - 3) * a * C - 1) * (a * C - a * B - A + 1)
               + ((C * C + b * b * c * c + b * b * d * d + c * c * d * d
                   + b * c * d * B - A) * a * a
                  + A * (C - B) * a + C * C - C * B) * q ** (2 * n - 2)
               + ((1 - A) * a * a - (A - 1) * B * a - C * B
                  + b * b + A + c * c + d * d + 1) * qn1)
    return (-16 * f1 * f2 * bracket
            + 4 * (qn1 + 1) ** 2 * (qn1 * a * A + qn1 * C - a - B) ** 2 * f2 ** 2)


def extreme_zero_bounds(params: AWParams, n: int, precision: int = 53) -> BoundPair:
    """Closed-form upper bound on the smallest zero and lower bound on the
    largest zero of P_n (minus resp. plus branch of the same quadratic)."""
    if n < 2:
        raise UsageError("extreme zero bounds need n >= 2")
    a = params.a
    q = params.ctx.q
    A, B, C = _abc_elementary(params)
    qn1 = q ** (n - 1)
    f1 = a * C * q ** (2 * n - 2) - 1
    f2 = a * C * qn1 - 1
    den = 8 * f1 * f2
    if den == 0:
        raise SingularBoundError("bound denominator vanished")
    I_n = bound_discriminant(params, n)
    if I_n < 0:
        raise ComplexBoundsError(f"I_n = {I_n} < 0: bounds are complex")
    head = 2 * (qn1 + 1) * (qn1 * (a * A + C) - a - B) * f2
    with mpmath.workprec(max(precision, 53)):
        root = mpmath.sqrt(mpmath.mpf(I_n.numerator) / I_n.denominator
                           if isinstance(I_n, Fraction) else I_n)
        upper = (_to_mpf(head) - root) / _to_mpf(den)
        lower = (_to_mpf(head) + root) / _to_mpf(den)
        upper, lower = float(upper), float(lower)
    return BoundPair(upper, lower, I_n, A, B, C)


def _to_mpf(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


def g2_coefficients(params: AWParams, n: int):
    """Coefficients (c0, c1, c2) of the scaled quadratic
    s_n * G_{2,n}(x) = c2 x^2 + c1 x + c0; the scale does not move the roots.
    """
    a, b, c, d = params.params
    q = params.ctx.q
    qn = q ** n
    abcd = params.abcd
    c2 = 4 * (abcd * q ** (2 * n) - 1) * (abcd * qn - 1)
    c1 = -(2 * qn + 2) * (qn * (a * b * c + a * b * d + a * c * d + b * c * d)
                          - a - b - c - d) * (abcd * qn - 1)
    c0 = (-(q ** (3 * n) * abcd + 1)
          * (abcd - a * b - a * c - a * d - b * c - b * d - c * d + 1)
          + ((b * b * c * c * d * d + b * b * c * c + b * b * c * d + b * b * d * d
              + b * c * c * d + b * c * d * d + c * c * d * d
              - b * c - b * d - c * d) * a * a
             + (b * c + b * d + c * d) * (b * c * d - b - c - d) * a
             + b * c * d * (b * c * d - b - c - d)) * q ** (2 * n)
          + ((1 - b * c - b * d - c * d) * a * a
             - (b * c + b * d + c * d - 1) * (d + c + b) * a
             - b * b * c * d - b * c * c * d - b * c * d * d
             + b * b + b * c + b * d + c * c + c * d + d * d + 1) * qn)
    return c0, c1, c2


def g2_roots(params: AWParams, n: int, precision: int = 53):
    """Roots of G_{2,n}; with index n-1 these equal extreme_zero_bounds(n)."""
    c0, c1, c2 = g2_coefficients(params, n)
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        raise ComplexBoundsError("G_2 quadratic has complex roots")
    with mpmath.workprec(max(precision, 53)):
        root = mpmath.sqrt(_to_mpf(disc))
        r1 = float((-_to_mpf(c1) - root) / (2 * _to_mpf(c2)))
        r2 = float((-_to_mpf(c1) + root) / (2 * _to_mpf(c2)))
    return (min(r1, r2), max(r1, r2))


TABLE1_PARAMS = (Fraction(6, 7), Fraction(5, 7), Fraction(4, 7), Fraction(3, 7))
TABLE1_Q = Fraction(1, 9)
TABLE1_DEGREES = (7, 9, 12)


def table1(precision: int = 128):
    """Reference table of zeros and bounds: for n in {7, 9, 12} and
    (a,b,c,d,q) = (6/7, 5/7, 4/7, 3/7, 1/9), the row
    (smallest zero, upper bound, lower bound, largest zero)."""
    if precision < 53:
        raise UsageError("precision must be at least 53 bits")
    from .scalars import QContext
    ctx = QContext(q=TABLE1_Q)
    params = AWParams(*TABLE1_PARAMS, ctx)
    nmax = max(TABLE1_DEGREES)
    rc = extract_recurrence(params, nmax)
    rows = {}
    for n in TABLE1_DEGREES:
        zs = zeros_sturm(rc, n, tol=1e-13, precision=precision)
        bp = extreme_zero_bounds(params, n, precision=precision)
        rows[n] = (zs.values[0], bp.upper_on_smallest, bp.lower_on_largest,
                   zs.values[-1])
    return rows
