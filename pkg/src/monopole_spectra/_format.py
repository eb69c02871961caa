"""Serialization helpers: 15-digit decimal strings and closed-form algebraic strings."""
from __future__ import annotations

import math
from fractions import Fraction

from .exact import RationalPolynomial

SIG_DIGITS = 15


def num(x) -> str:
    """Real number as a decimal string with 15 significant digits."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == 0.0:
        return "0"
    return format(x, f".{SIG_DIGITS}g")


def cnum(z) -> dict:
    z = complex(z)
    return {"re": num(z.real), "im": num(z.imag)}


def frac(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _square_part(n: int) -> tuple[int, int]:
    """n = s^2 d with d squarefree; returns (s, d)."""
    s, d, f = 1, n, 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            s *= f
        f += 1
    return s, d


def _quadratic_root(a: int, b: int, c: int, value: float) -> str | None:
    """Closed form of the root of a x^2 + b x + c nearest to ``value``."""
    disc = b * b - 4 * a * c
    if disc < 0:
        return None
    s, d = _square_part(disc)
    best = None
    for eps in (1, -1):
        root = (-b + eps * s * math.sqrt(d)) / (2 * a)
        if best is None or abs(root - value) < abs(best[1] - value):
            best = (eps, root)
    eps = best[0]
    if d == 1:
        return frac(Fraction(-b + eps * s, 2 * a))
    p, q, r = -b, eps * s, 2 * a
    g = math.gcd(math.gcd(p, q), r)
    p, q, r = p // g, q // g, r // g
    if r < 0:
        p, q, r = -p, -q, -r
    rad = f"sqrt({d})" if abs(q) == 1 else f"{abs(q)}*sqrt({d})"
    if p == 0:
        body = rad if q > 0 else f"-{rad}"
        return body if r == 1 else f"{body}/{r}"
    body = f"{p}{'+' if q > 0 else '-'}{rad}"
    return body if r == 1 else f"({body})/{r}"


def algebraic_form(poly: RationalPolynomial, value: float) -> str | None:
    """Radical expression for a root of a linear, quadratic or biquadratic integer polynomial."""
    _, ints = poly.primitive_integer()
    deg = len(ints) - 1
    if deg == 1:
        return frac(Fraction(-ints[0], ints[1]))
    if deg == 2:
        return _quadratic_root(ints[2], ints[1], ints[0], value)
    if deg == 4 and ints[1] == 0 and ints[3] == 0 and value > 0:
        inner = _quadratic_root(ints[4], ints[2], ints[0], value * value)
        if inner is None:
            return None
        return f"sqrt({inner})"
    return None
