"""Polynomials in x = cos(theta) and their symmetric Laurent lifts in z.

The lift of f is f((z + 1/z)/2); a polynomial in x of degree d lifts to a
Laurent polynomial supported on [-d, d] with coefficient(k) == coefficient(-k).
Operators act in the Laurent domain (see operators.py), so conversions in
both directions are kept exact.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import QContext, UsageError

_HALF = Fraction(1, 2)


class XPoly:
    """Univariate polynomial in x; coeffs[i] is the coefficient of x**i.

    The zero polynomial is the empty coefficient list, so structural
    equality is canonical.  Coefficients may be Fraction, int, float or
    mpmath.mpf; the backend is whatever the caller put in.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = coeffs

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def monomial(cls, d, c=1):
        return cls([0] * d + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        if not self.coeffs:
            raise UsageError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __add__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return XPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, XPoly):
            if self.is_zero or other.is_zero:
                return XPoly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return XPoly(out)
        return XPoly([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, scalar):
        return XPoly([c / scalar for c in self.coeffs])

    def __pow__(self, n: int):
        result = XPoly([1])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        return self.coeffs == XPoly.const(other).coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __call__(self, x0):
        """Horner evaluation; exact for exact backends."""
        acc = x0 * 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def map(self, fn):
        return XPoly([fn(c) for c in self.coeffs])

    def __repr__(self):
        return f"XPoly({self.coeffs!r})"


class SymLaurent:
    """Laurent polynomial in z, stored as {exponent: coefficient}.

    Lifts of XPoly values are symmetric (coefficient(k) == coefficient(-k));
    intermediate operator results (after the shift z -> q^(1/2) z) are not,
    so symmetry is an invariant of lifts, not of the type.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for k, c in dict(coeffs).items():
                if c != 0:
                    self.coeffs[k] = c

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def support(self):
        return sorted(self.coeffs)

    def coeff(self, k: int):
        return self.coeffs.get(k, 0)

    def is_symmetric(self) -> bool:
        return all(self.coeff(-k) == c for k, c in self.coeffs.items())

    def __add__(self, other):
        if not isinstance(other, SymLaurent):
            other = SymLaurent({0: other})
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return SymLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return SymLaurent({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, SymLaurent):
            other = SymLaurent({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymLaurent):
            out = {}
            for k1, c1 in self.coeffs.items():
                for k2, c2 in other.coeffs.items():
                    k = k1 + k2
                    out[k] = out.get(k, 0) + c1 * c2
            return SymLaurent(out)
        return SymLaurent({k: c * other for k, c in self.coeffs.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, scalar):
        return SymLaurent({k: c / scalar for k, c in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, SymLaurent):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def substitute(self, t):
        """Replace z by t*z: coefficient of z^k picks up t^k."""
        return SymLaurent({k: c * t ** k for k, c in self.coeffs.items()})

    def __repr__(self):
        return f"SymLaurent({dict(sorted(self.coeffs.items()))!r})"


_ZX = SymLaurent({1: _HALF, -1: _HALF})  # lift of x


def x_to_laurent(p: XPoly) -> SymLaurent:
    """Lift p(x) to p((z + 1/z)/2), expanded in powers of z."""
    acc = SymLaurent()
    for c in reversed(p.coeffs):
        acc = acc * _ZX + c
    return acc


def laurent_to_x(L: SymLaurent) -> XPoly:
    """Inverse of x_to_laurent; input must satisfy the symmetry invariant.

    Works from the top exponent down: the lift of t*x^d has z^d coefficient
    t/2^d, so each step peels one monomial off exactly (no linear solve).
    """
    if not L.is_symmetric():
        raise UsageError("laurent_to_x: input is not symmetric under z <-> 1/z")
    rest = SymLaurent(dict(L.coeffs))
    out = {}
    while not rest.is_zero:
        d = max(abs(k) for k in rest.coeffs)
        t = rest.coeff(d) * (2 ** d) if d > 0 else rest.coeff(0)
        out[d] = t
        rest = rest - x_to_laurent(XPoly.monomial(d, t))
    size = max(out) + 1 if out else 0
    return XPoly([out.get(i, 0) for i in range(size)])


def evaluate(p: XPoly, x0):
    """Horner evaluation of p at x0 (alias for p(x0))."""
    return p(x0)


def f_basis(ctx: QContext, k: int) -> XPoly:
    """Monic basis F_k(x) = prod_{j=0}^{k-1} (x - zeta_j),
    zeta_j = (q^(-1/4-j/2) + q^(1/4+j/2)) / 2.

    D_q acts diagonally on this basis: D_q F_k = gamma_k F_{k-1}.
    Needs q^(1/4), i.e. a context built from u (or a float context).
    """
    if k < 0:
        raise UsageError("f_basis needs k >= 0")
    p = XPoly([1])
    for j in range(k):
        zeta = (ctx.quarter_power(-1 - 2 * j) + ctx.quarter_power(1 + 2 * j)) / 2
        p = p * XPoly([-zeta, 1])
    return p


def u_coefficient_polys(ctx: QContext):
    """U_1(x) = (alpha^2 - 1) x and U_2(x) = (alpha^2 - 1)(x^2 - 1)."""
    s = ctx.alpha1 * ctx.alpha1 - 1
    return XPoly([0, s]), XPoly([-s, 0, s])
