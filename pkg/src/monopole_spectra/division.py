"""Rational masses: the mass relation as a division value of wp.

For m = p/q the argument of the mass relation is a rational multiple
2 varpi1 k1/n of the period, so the relation right side must be a root of the
special division polynomial P_n.  Substituting the family's invariants turns
that into an exact integer polynomial in alpha.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import mpmath

from .cohomology import minimal_polynomial_of_root
from .errors import DomainError, IntegrityError, ResourceError
from .exact import RationalPolynomial
from .platonic import (
    Group,
    alpha_from_mass,
    branch_residual,
    mass_relation_residual,
    quotient_invariants,
    relation_rhs,
    weighted_relation_data,
)
from .special_functions.divpoly import division_degree, special_division_value

log = logging.getLogger(__name__)

MAX_ORDER = 15


def parse_mass(mass) -> Fraction:
    """Exact positive rational from an int, Fraction or 'p/q' string."""
    if isinstance(mass, bool) or isinstance(mass, float):
        raise DomainError(f"mass must be an exact rational (int, Fraction or 'p/q'), got {mass!r}")
    if isinstance(mass, str):
        try:
            q = Fraction(mass.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot read {mass!r} as a rational number") from exc
    elif isinstance(mass, Rational):
        q = Fraction(mass)
    else:
        raise DomainError(f"mass must be an exact rational, got {type(mass).__name__}")
    if q <= 0:
        raise DomainError(f"mass must be positive, got {q}")
    return q


@dataclass(frozen=True)
class DivisionPoint:
    """The relation argument is 2 varpi1 k1 / n with gcd(k1, n) = 1."""

    n: int
    k1: int
    group: Group
    mass: Fraction

    def __post_init__(self):
        if self.n < 1 or math.gcd(self.k1, self.n) != 1:
            raise IntegrityError(f"division point ({self.k1}/{self.n}) not in lowest terms")

    @property
    def degree(self) -> int:
        return division_degree(self.n)


def division_point(group, mass) -> DivisionPoint:
    g = Group.parse(group)
    m = parse_mass(mass)
    p, q = m.numerator, m.denominator
    if g is Group.TETRA:
        num, den = q, 2 * p + 3 * q
    else:
        num, den = 3 * q, 2 * (p + 2 * q)
    d = math.gcd(num, den)
    return DivisionPoint(den // d, num // d, g, m)


@dataclass(frozen=True)
class AlphaPolynomial:
    coefficients: tuple  # integers, low degree first
    group: Group
    mass: Fraction

    def __post_init__(self):
        cs = self.coefficients
        if len(cs) < 2 or cs[-1] == 0:
            raise IntegrityError("alpha polynomial must have positive degree")
        if math.gcd(*cs) != 1:
            raise IntegrityError("alpha polynomial is not primitive")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def polynomial(self) -> RationalPolynomial:
        return RationalPolynomial(list(self.coefficients))

    def divisible_by(self, factor) -> bool:
        f = factor if isinstance(factor, RationalPolynomial) else RationalPolynomial(list(factor))
        return f.divides(self.polynomial)


def _strip_root(p: RationalPolynomial, root: int) -> RationalPolynomial:
    return p.shift_out_root(root)[0]


def alpha_polynomial(group, mass, max_n: int = MAX_ORDER) -> AlphaPolynomial:
    """Integer polynomial in alpha whose roots include alpha(mass)."""
    pt = division_point(group, mass)
    if pt.n > max_n:
        raise ResourceError(f"mass {pt.mass} needs division order n = {pt.n} > budget {max_n}")
    if pt.n < 2:
        raise DomainError(f"mass {pt.mass} gives a trivial division point")
    D, X, G2, G3 = weighted_relation_data(pt.group)
    num = special_division_value(pt.n, X, G2, G3)
    if num.is_zero():
        raise IntegrityError("division value vanishes identically in alpha")
    num = _strip_root(num, 0)
    if pt.group is Group.OCTA:
        num = _strip_root(num, -1)
    _, ints = num.primitive_integer()
    if ints[-1] < 0:
        ints = [-c for c in ints]
    out = AlphaPolynomial(tuple(ints), pt.group, pt.mass)
    if pt.group is Group.TETRA and not out.polynomial.is_even():
        raise IntegrityError("tetrahedral alpha polynomial is not even: substitution pipeline is broken")
    return out


def division_value_residual(group, alpha: float, mass) -> float:
    """|P_n(x_*, g2, g3)| at the solved alpha, in weighted-scale units of the leading term.

    The inputs are rescaled by t = max(|x|, |g2|^(1/2), |g3|^(1/3)) so P_n is
    evaluated at order-one arguments, then divided by its leading coefficient.
    """
    pt = division_point(group, mass)
    inv = quotient_invariants(pt.group, alpha)
    with mpmath.workdps(40):
        x = mpmath.mpf(float(relation_rhs(pt.group, float(alpha))))
        g2, g3 = mpmath.mpf(inv.g2), mpmath.mpf(inv.g3)
        t = max(abs(x), abs(g2) ** 0.5, abs(g3) ** (mpmath.mpf(1) / 3))
        val = special_division_value(pt.n, x / t, g2 / t ** 2, g3 / t ** 3)
        lead = special_division_value(pt.n, mpmath.mpf(1), mpmath.mpf(0), mpmath.mpf(0))
        return float(abs(val) / abs(lead))


@dataclass(frozen=True)
class RationalMassAlpha:
    group: Group
    mass: Fraction
    point: DivisionPoint | None
    alpha: float
    residual: float
    polynomial: AlphaPolynomial | None
    minimal_polynomial: RationalPolynomial | None
    candidates: tuple
    method: str  # "division" or "numeric"


def alpha_for_rational_mass(group, mass, max_n: int = MAX_ORDER,
                            minimal: bool = True, tol: float = 1e-8) -> RationalMassAlpha:
    """Select the physical real root of the alpha polynomial."""
    g = Group.parse(group)
    m = parse_mass(mass)
    pt = division_point(g, m)
    if pt.n > max_n:
        log.info("mass %s needs n = %d > %d; using the numeric mass relation", m, pt.n, max_n)
        a = alpha_from_mass(g, float(m))
        return RationalMassAlpha(g, m, pt, a, abs(mass_relation_residual(g, a, float(m))),
                                 None, None, (), "numeric")
    poly = alpha_polynomial(g, m, max_n)
    sq = poly.polynomial.squarefree_part()
    hi = Fraction(g.alpha_max) * (1 + Fraction(1, 10 ** 12))
    roots = [r for r in sq.real_roots_in(0, hi, grid=4096) if 0 < r <= g.alpha_max]
    if not roots:
        raise IntegrityError(f"alpha polynomial for m = {m} has no root in (0, {g.alpha_max}]")
    fm = float(m)
    best = min(roots, key=lambda r: abs(branch_residual(g, r, fm)))
    res = abs(mass_relation_residual(g, best, fm))
    scale = max(1.0, abs(float(relation_rhs(g, best))))
    if res > tol * scale:
        raise IntegrityError(f"no root of the alpha polynomial satisfies the mass relation "
                             f"(best {best!r}, residual {res!r})")
    mp = minimal_polynomial_of_root(sq, best) if minimal else None
    return RationalMassAlpha(g, m, pt, float(best), res, poly, mp, tuple(roots), "division")
