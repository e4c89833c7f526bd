"""Scalar backends, q-shifted factorials and the alpha/gamma sequences.

Two coefficient backends flow through the whole package:

* exact -- ``fractions.Fraction`` (and ``int``).  The base is generated
  by a rational ``u`` with ``q = u**4``, so ``q**(1/2) = u**2`` and
  ``q**(1/4) = u`` are themselves rational and every operator formula
  stays inside the rationals.
* float -- ``float`` or ``mpmath.mpf`` at a caller-chosen precision.

No function here applies an implicit tolerance; float comparisons are
always the caller's responsibility.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath


class UsageError(ValueError):
    """Caller violated a documented precondition."""


class BackendMismatchError(UsageError):
    """Exact and float scalars were mixed in a single operation."""


def is_exact(x) -> bool:
    """True for scalars of the exact (rational) backend."""
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def same_backend(*values) -> bool:
    kinds = {is_exact(v) for v in values}
    return len(kinds) == 1


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or a plain integer/decimal string into a Fraction."""
    return Fraction(text.strip())


def exact_sqrt(x: Fraction):
    """Square root of a rational: exact if x is a perfect square, else float."""
    x = Fraction(x)
    if x < 0:
        raise UsageError("square root of a negative rational")
    np, dp = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if np * np == x.numerator and dp * dp == x.denominator:
        return Fraction(np, dp)
    return math.sqrt(x)


def scalar_sqrt(x):
    """Backend-preserving square root (Fraction in, Fraction out when possible)."""
    if is_exact(x):
        return exact_sqrt(Fraction(x))
    if isinstance(x, mpmath.mpf):
        return mpmath.sqrt(x)
    return math.sqrt(x)


def q_pochhammer(a, q, k: int):
    """(a;q)_k = prod_{j=0}^{k-1} (1 - a q^j); (a;q)_0 = 1."""
    if k < 0:
        raise UsageError("q_pochhammer needs k >= 0")
    if not same_backend(a, q):
        raise BackendMismatchError("q_pochhammer: a and q use different backends")
    result = a * 0 + 1
    power = result
    for _ in range(k):
        result *= 1 - a * power
        power *= q
    return result


def q_pochhammer_ratio(a, q, k: int, n: int):
    """(a;q)_n / (a;q)_k computed without division: prod_{j=k}^{n-1} (1 - a q^j).

    Well defined even when (a;q)_k vanishes, which is the point: the
    cleared series form relies on this cancellation.
    """
    if not 0 <= k <= n:
        raise UsageError("q_pochhammer_ratio needs 0 <= k <= n")
    result = a * 0 + 1
    power = q ** k
    for _ in range(n - k):
        result *= 1 - a * power
        power *= q
    return result


class QContext:
    """A fixed base q with cached alpha/gamma sequences.

    Built either from the generator ``u`` (``q = u**4``, fully exact when
    u is rational) or directly from ``q`` (``sqrt(q)`` is kept exact when
    q is a rational perfect square, e.g. q = 1/9).
    """

    def __init__(self, u=None, q=None, allow_q_ge_1: bool = False):
        if (u is None) == (q is None):
            raise UsageError("supply exactly one of u or q")
        if u is not None:
            if u <= 0:
                raise UsageError("generator u must be positive")
            self.u = Fraction(u) if is_exact(u) else u
            self.sqrt_q = self.u * self.u
            self.q = self.sqrt_q * self.sqrt_q
        else:
            if q <= 0:
                raise UsageError("q must be positive")
            self.q = Fraction(q) if is_exact(q) else q
            self.u = None
            self.sqrt_q = scalar_sqrt(self.q)
        if self.q >= 1 and not allow_q_ge_1:
            raise UsageError("q must lie in (0,1); pass allow_q_ge_1 to override")
        self.exact = is_exact(self.sqrt_q)
        self.one = self.q ** 0
        self.zero = self.q * 0

    @property
    def alpha1(self):
        return self.alpha(1)

    def q_half_power(self, n: int):
        """q**(n/2) for any integer n."""
        return self.sqrt_q ** n

    def alpha(self, n: int):
        """2*alpha_n = q^(n/2) + q^(-n/2)."""
        return (self.q_half_power(n) + self.q_half_power(-n)) / 2

    def gamma(self, n: int):
        """(q^(1/2) - q^(-1/2)) * gamma_n = q^(n/2) - q^(-n/2)."""
        if n == 0:
            return self.zero
        num = self.q_half_power(n) - self.q_half_power(-n)
        den = self.sqrt_q - self.one / self.sqrt_q
        return num / den

    def quarter_power(self, n: int):
        """q**(n/4); exact only when the context was built from u."""
        if self.u is not None:
            return self.u ** n
        if self.exact:
            raise UsageError("q**(1/4) unavailable: context built from q without a generator u")
        return self.q ** (n / 4.0)

    def __repr__(self):
        return f"QContext(q={self.q!r}, exact={self.exact})"


def gamma_alpha(ctx: QContext, n: int):
    """The pair (gamma_n, alpha_n) for n >= 0."""
    if n < 0:
        raise UsageError("gamma_alpha needs n >= 0")
    return ctx.gamma(n), ctx.alpha(n)
