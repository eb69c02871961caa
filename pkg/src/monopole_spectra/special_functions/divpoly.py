"""Division polynomials for y^2 = 4x^3 - g2 x - g3.

The recurrence works in the *reduced* form r_n: psi_n = r_n for odd n and
psi_n = y r_n for even n, where psi_n = sigma(n u)/sigma(u)^(n^2) is the
sigma-normalised division function.  Everything is written against a generic
commutative ring supporting ``+ - *`` and multiplication by Fractions, so the
same code runs on exact rationals, floats, univariate polynomials and the
symbolic trivariate ring below.

Normalisation of the special division polynomial:

    P_n = (n-1)^(n-1) r_n / n        (n odd)
    P_n = (n-1)^(n-1) r_n / (n/2)    (n even, n >= 4)

which equals psi_n/n, respectively -psi_n/((n/2) wp'), when psi_n is the
Hankel determinant of wp-derivatives evaluated by :func:`division_psi_numeric`.
For n = 2 that definition degenerates to the constant -1, so
:func:`division_poly` returns F(x) = 4x^3 - g2 x - g3 instead, the polynomial
whose roots are the 2-division values.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

import numpy as np

from ..errors import DomainError, NumericError, PoleError
from ..exact import RationalPolynomial
from .weierstrass import EllipticInvariants, wp_and_prime, derivative_polynomials


def reduced_division_sequence(n: int, x, g2, g3) -> dict[int, Any]:
    """Return {k: r_k} for every index the recurrence needs to reach r_n."""
    if n < 0:
        raise DomainError("division index must be nonnegative")
    Y = 4 * x ** 3 - g2 * x - g3
    Y2 = Y * Y
    zero = x - x
    one = zero + 1
    memo: dict[int, Any] = {
        0: zero,
        1: one,
        2: -one,
        3: 3 * x ** 4 - Fraction(3, 2) * g2 * x ** 2 - 3 * g3 * x - Fraction(1, 16) * g2 ** 2,
        4: -(2 * x ** 6 - Fraction(5, 2) * g2 * x ** 4 - 10 * g3 * x ** 3
             - Fraction(5, 8) * g2 ** 2 * x ** 2 - Fraction(1, 2) * g2 * g3 * x
             - g3 ** 2 + Fraction(1, 32) * g2 ** 3),
    }

    def r(k: int):
        if k in memo:
            return memo[k]
        m = k // 2
        if k % 2:
            if m % 2 == 0:
                val = Y2 * r(m + 2) * r(m) ** 3 - r(m - 1) * r(m + 1) ** 3
            else:
                val = r(m + 2) * r(m) ** 3 - Y2 * r(m - 1) * r(m + 1) ** 3
        else:
            val = -r(m) * (r(m + 2) * r(m - 1) ** 2 - r(m - 2) * r(m + 1) ** 2)
        memo[k] = val
        return val

    r(n)
    return memo


def special_division_scale(n: int) -> Fraction:
    """Factor c_n with P_n = c_n r_n (n >= 3)."""
    if n % 2:
        return Fraction((n - 1) ** (n - 1), n)
    return Fraction((n - 1) ** (n - 1), n // 2)


def special_division_value(n: int, x, g2, g3):
    """P_n(x; g2, g3) in whatever ring x, g2, g3 live in (n = 2 gives F(x))."""
    if n < 2:
        raise DomainError(f"division order must be >= 2, got {n}")
    if n == 2:
        return 4 * x ** 3 - g2 * x - g3
    return special_division_scale(n) * reduced_division_sequence(n, x, g2, g3)[n]


def division_degree(n: int) -> int:
    if n == 2:
        return 3
    return (n * n - 1) // 2 if n % 2 else (n * n - 4) // 2


# --- symbolic ring Q[x, g2, g3] ----------------------------------------------

class TrivariatePoly:
    """Sparse polynomial in (x, g2, g3) with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def gens(cls):
        return cls({(1, 0, 0): 1}), cls({(0, 1, 0): 1}), cls({(0, 0, 1): 1})

    def _lift(self, other):
        if isinstance(other, TrivariatePoly):
            return other
        return TrivariatePoly({(0, 0, 0): Fraction(other)})

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return TrivariatePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TrivariatePoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        out: dict = {}
        for (a1, b1, c1), v1 in self.terms.items():
            for (a2, b2, c2), v2 in o.terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, 0) + v1 * v2
        return TrivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = TrivariatePoly({(0, 0, 0): 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return self.terms == self._lift(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def degree_x(self) -> int:
        return max((k[0] for k in self.terms), default=-1)

    def specialize(self, g2, g3) -> RationalPolynomial:
        """Exact polynomial in x after substituting rational g2, g3."""
        g2, g3 = Fraction(g2), Fraction(g3)
        cs = [Fraction(0)] * (self.degree_x + 1)
        for (a, b, c), v in self.terms.items():
            cs[a] += v * g2 ** b * g3 ** c
        return RationalPolynomial(cs)

    def __call__(self, x, g2, g3):
        return sum(v * x ** a * g2 ** b * g3 ** c for (a, b, c), v in self.terms.items())

    def __repr__(self):
        return f"TrivariatePoly({len(self.terms)} terms, deg_x={self.degree_x})"


def division_poly(n: int, g2=None, g3=None):
    """Special division polynomial P_n.

    Without invariants the result is symbolic (:class:`TrivariatePoly` in
    x, g2, g3).  With exact rational ``g2``, ``g3`` it is a
    :class:`RationalPolynomial` in x, computed in Q[x] directly.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"division order must be an integer >= 2, got {n!r}")
    if g2 is None and g3 is None:
        x, G2, G3 = TrivariatePoly.gens()
        return special_division_value(n, x, G2, G3)
    if g2 is None or g3 is None:
        raise DomainError("give both invariants or neither")
    x = RationalPolynomial.x()
    return special_division_value(n, x, Fraction(g2), Fraction(g3))


def division_psi_numeric(n: int, u: complex, inv: EllipticInvariants) -> complex:
    """Hankel determinant of wp-derivatives with the (n-1)^(n-1)/(prod j!)^2 prefactor."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"division order must be a positive integer, got {n!r}")
    if n == 1:
        return 1.0 + 0.0j
    try:
        p, dp = wp_and_prime(u, inv)
    except PoleError as exc:
        raise NumericError(f"division_psi_numeric: {exc}") from exc
    polys = derivative_polynomials(2 * n - 3, inv.g2, inv.g3)
    ders = [complex(a(p) + b(p) * dp) for a, b in polys]
    size = n - 1
    H = np.array([[ders[i + j + 1] for j in range(size)] for i in range(size)], dtype=np.complex128)
    pref = float((n - 1) ** (n - 1)) / math.prod(math.factorial(j) for j in range(1, n)) ** 2
    return complex(pref * np.linalg.det(H))


def special_division_from_psi(n: int, u: complex, inv: EllipticInvariants) -> complex:
    """P_n(wp(u)) through the determinant route (n >= 3)."""
    psi = division_psi_numeric(n, u, inv)
    if n % 2:
        return psi / n
    dp = wp_and_prime(u, inv)[1]
    return -psi / ((n // 2) * dp)
