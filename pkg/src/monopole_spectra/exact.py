"""Exact univariate polynomials over Q and Q(i).

Coefficients are stored low degree first.  The zero polynomial has an empty
coefficient tuple and degree -1; every other instance has a nonzero leading
coefficient.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as _igcd
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DomainError

_MOD_PRIME = (1 << 61) - 1


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot convert {c!r} to an exact rational")


class GaussianRational:
    """Exact complex number a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _to_fraction(re))
        object.__setattr__(self, "im", _to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact")
        return cls(x, 0)

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conjugate()
        return GaussianRational(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return GaussianRational(1) / (self ** -n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


I = GaussianRational(0, 1)


class _DensePoly:
    """Shared dense-polynomial machinery; subclasses fix the coefficient field."""

    __slots__ = ("coeffs",)
    var = "a"

    @staticmethod
    def _coerce(c):  # pragma: no cover - overridden
        raise NotImplementedError

    _ZERO = None
    _ONE = None

    def __init__(self, coeffs: Iterable = ()):
        cs = [self._coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def constant(cls, c):
        return cls([c])

    def _wrap(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, _DensePoly):
            return NotImplemented
        try:
            return type(self)([other])
        except TypeError:
            return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            return self._ZERO
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._ZERO

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return type(self)()
        if len(b) == 1:
            c = b[0]
            return type(self)([x * c for x in a])
        if len(a) == 1:
            c = a[0]
            return type(self)([c * x for x in b])
        out = [self._ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = type(self)([self._ONE])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation; exact for exact ``x``, floating for floats."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner):
        """Return self(inner(x))."""
        out = type(self)()
        for c in reversed(self.coeffs):
            out = out * inner + type(self)([c])
        return out

    def derivative(self):
        return type(self)([k * c for k, c in enumerate(self.coeffs)][1:])

    def scale(self, c):
        c = self._coerce(c)
        return type(self)([x * c for x in self.coeffs])

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return type(self)([c / lc for c in self.coeffs])

    def __divmod__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree
        lc = o.leading
        if len(rem) - 1 < db:
            return type(self)(), self
        quo = [self._ZERO] * (len(rem) - db)
        bc = o.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lc
            quo[k] = c
            if c:
                for j, y in enumerate(bc):
                    rem[k + j] = rem[k + j] - c * y
        return type(self)(quo), type(self)(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def divides(self, other) -> bool:
        """True if ``self`` divides ``other`` exactly."""
        return divmod(self._wrap(other), self)[1].is_zero()

    def shift_out_root(self, root) -> tuple:
        """Divide out (x - root) as often as possible; returns (quotient, multiplicity)."""
        lin = type(self)([-self._coerce(root), 1])
        p, k = self, 0
        while not p.is_zero() and p.degree > 0:
            q, r = divmod(p, lin)
            if not r.is_zero():
                break
            p, k = q, k + 1
        return p, k

    def __repr__(self):
        return f"{type(self).__name__}({list(map(str, self.coeffs))})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            cs = str(c)
            if mono and cs in ("1", "-1"):
                term = ("-" if cs == "-1" else "") + mono
            elif mono:
                term = f"{cs}*{mono}"
            else:
                term = cs
            parts.append(term)
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


class RationalPolynomial(_DensePoly):
    """Polynomial with exact rational coefficients."""

    __slots__ = ()
    _ZERO = Fraction(0)
    _ONE = Fraction(1)

    @staticmethod
    def _coerce(c):
        if isinstance(c, GaussianRational):
            if c.im:
                raise TypeError("non-real coefficient for RationalPolynomial")
            return c.re
        return _to_fraction(c)

    # --- integer normal forms -------------------------------------------------
    def primitive_integer(self) -> tuple[Fraction, list[int]]:
        """Return (content, integer coeffs) with positive leading coefficient.

        ``self == content * sum(coeffs[k] x^k)`` and the integer coefficients
        have gcd 1.
        """
        if not self.coeffs:
            return Fraction(0), []
        den = reduce(lambda a, b: a * b // _igcd(a, b), (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(_igcd, (abs(v) for v in ints), 0)
        if ints[-1] < 0:
            g = -g
        ints = [v // g for v in ints]
        return Fraction(g, den), ints

    def primitive(self) -> "RationalPolynomial":
        return RationalPolynomial(self.primitive_integer()[1])

    def integer_coefficients(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("polynomial has non-integer coefficients")
            out.append(int(c))
        return out

    # --- gcd / squarefree -----------------------------------------------------
    def gcd(self, other: "RationalPolynomial") -> "RationalPolynomial":
        """Monic gcd over Q (primitive pseudo-remainder sequence over Z)."""
        other = self._wrap(other)
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()
        a = self.primitive_integer()[1]
        b = other.primitive_integer()[1]
        if len(a) < len(b):
            a, b = b, a
        if _modp_gcd_degree(a, b) == 0:
            return RationalPolynomial([1])
        while b:
            r = _int_prem(a, b)
            a, b = b, _int_primitive(r)
        return RationalPolynomial(a).monic()

    def squarefree_part(self) -> "RationalPolynomial":
        if self.degree <= 0:
            return self
        g = self.gcd(self.derivative())
        if g.degree == 0:
            return self
        return self.exact_div(g)

    def is_even(self) -> bool:
        return all(not c for c in self.coeffs[1::2])

    # --- real roots -------------------------------------------------------------
    def sign_at(self, x: Fraction) -> int:
        v = self(Fraction(x))
        return (v > 0) - (v < 0)

    def real_roots_in(self, lo, hi, grid: int = 2048, width: float = 1e-15) -> list[float]:
        """Isolate and refine the sign-changing real roots in the open interval (lo, hi].

        Intended for squarefree input: the interval is sampled on an exact
        rational grid, and each sign change is refined by exact bisection.
        Exact zeros on grid points are reported as roots.
        """
        if self.degree <= 0:
            return []
        lo, hi = Fraction(lo), Fraction(hi)
        _, ints = self.primitive_integer()
        pts = [lo + (hi - lo) * Fraction(k, grid) for k in range(grid + 1)]
        signs = [_int_sign_at(ints, p) for p in pts]
        roots: list[float] = []
        for k in range(grid):
            a, b = pts[k], pts[k + 1]
            sa, sb = signs[k], signs[k + 1]
            if sb == 0:
                roots.append(float(b))
                continue
            if sa == 0 or sa == sb:
                continue
            while float(b - a) > width * max(1.0, abs(float(a))):
                mid = (a + b) / 2
                sm = _int_sign_at(ints, mid)
                if sm == 0:
                    a = b = mid
                    break
                if sm == sa:
                    a = mid
                else:
                    b = mid
            roots.append(float((a + b) / 2))
        return roots


class GaussRationalPoly(_DensePoly):
    """Polynomial with exact Gaussian-rational coefficients."""

    __slots__ = ()
    _ZERO = GaussianRational(0)
    _ONE = GaussianRational(1)

    @staticmethod
    def _coerce(c):
        if isinstance(c, GaussianRational):
            return c
        return GaussianRational(_to_fraction(c))

    def _wrap(self, other):
        if isinstance(other, RationalPolynomial):
            return GaussRationalPoly(other.coeffs)
        return super()._wrap(other)

    def real_part(self) -> RationalPolynomial:
        return RationalPolynomial([c.re for c in self.coeffs])

    def imag_part(self) -> RationalPolynomial:
        return RationalPolynomial([c.im for c in self.coeffs])

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.coeffs)

    def to_rational(self) -> RationalPolynomial:
        if not self.is_real():
            raise DomainError("polynomial has non-real coefficients")
        return self.real_part()

    def __call__(self, x):
        if isinstance(x, (float, complex)):
            acc = 0j
            for c in reversed(self.coeffs):
                acc = acc * x + complex(c)
            return acc
        return super().__call__(x)

    @classmethod
    def from_parts(cls, re: RationalPolynomial, im: RationalPolynomial) -> "GaussRationalPoly":
        n = max(len(re), len(im))
        return cls([GaussianRational(re[k], im[k]) for k in range(n)])


# --- integer polynomial helpers (low degree first) -------------------------------

def _int_primitive(a: Sequence[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    if not a:
        return []
    g = reduce(_igcd, (abs(v) for v in a), 0)
    if a[-1] < 0:
        g = -g
    return [v // g for v in a]


def _int_prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of a by b over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and any(r):
        dr = len(r) - 1
        lr = r[-1]
        shift = dr - db
        r = [v * lb for v in r]
        for j, y in enumerate(b):
            r[shift + j] -= lr * y
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _modp_gcd_degree(a: Sequence[int], b: Sequence[int], p: int = _MOD_PRIME) -> int:
    """Degree of gcd(a, b) mod p, or -1 if p divides a leading coefficient."""
    if a[-1] % p == 0 or b[-1] % p == 0:
        return -1

    def norm(v):
        v = [x % p for x in v]
        while v and v[-1] == 0:
            v.pop()
        return v

    x, y = norm(a), norm(b)
    while y:
        inv = pow(y[-1], p - 2, p)
        while len(x) >= len(y):
            c = x[-1] * inv % p
            s = len(x) - len(y)
            for j, t in enumerate(y):
                x[s + j] = (x[s + j] - c * t) % p
            while x and x[-1] == 0:
                x.pop()
            if not x:
                break
        x, y = y, x
    return len(x) - 1


def _int_sign_at(ints: Sequence[int], x: Fraction) -> int:
    """Sign of sum ints[k] x^k at rational x, using integer arithmetic only."""
    num, den = x.numerator, x.denominator
    acc = 0
    dpow = 1
    for c in reversed(ints):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def rational_interpolate(xs: Sequence[int], ys: Sequence) -> RationalPolynomial:
    """Exact Newton interpolation through (xs[k], ys[k]) with rational data."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = RationalPolynomial([coef[-1]])
    for k in range(n - 2, -1, -1):
        poly = poly * RationalPolynomial([-xs[k], 1]) + coef[k]
    return poly
