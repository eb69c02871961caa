"""Tetrahedral (k=3) and octahedral (k=4) curve families and their mass relations.

Each family is a one-parameter pencil of curves with a platonic symmetry
group G.  The quotient by G is an elliptic curve y^2 = 4x^3 - g2 x - g3 with
invariants rational in alpha, and the mass fixes alpha through a condition of
the form  wp(c varpi1) = x_*(alpha).

Conventions (see :mod:`monopole_spectra.special_functions.weierstrass`):
e2 is the real root, varpi is real, varpi1 = 2 varpi' - varpi is purely
imaginary, and wp is real and increasing on the segment (0, varpi1] from
-inf to e2.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

import numpy as np
from scipy.optimize import brentq

from .curves import BidegreeCurve
from .errors import DomainError, IntegrityError, NumericError, PoleError
from .exact import GaussianRational, GaussRationalPoly, RationalPolynomial
from .special_functions import (
    EllipticInvariants,
    HalfPeriods,
    cubic_roots,
    half_periods,
    ray_integral,
    segment_integral,
    weierstrass_p,
)
from .special_functions.weierstrass import require_conjugate_roots

Number = Union[int, float, Fraction]


class Group(enum.Enum):
    TETRA = "tetra"   # A4, charge 3
    OCTA = "octa"     # S4, charge 4

    @property
    def charge(self) -> int:
        return 3 if self is Group.TETRA else 4

    @property
    def alpha_max(self) -> float:
        return math.sqrt(3.0) if self is Group.TETRA else 1.0

    @classmethod
    def parse(cls, g) -> "Group":
        if isinstance(g, Group):
            return g
        key = str(g).strip().lower()
        aliases = {"tetra": cls.TETRA, "tetrak3": cls.TETRA, "a4": cls.TETRA, "t": cls.TETRA,
                   "octa": cls.OCTA, "octak4": cls.OCTA, "s4": cls.OCTA, "o": cls.OCTA}
        if key not in aliases:
            raise DomainError(f"unknown group {g!r}; expected 'tetra' or 'octa'")
        return aliases[key]


def _exact(x) -> bool:
    return isinstance(x, Rational) and not isinstance(x, bool)


@dataclass(frozen=True)
class PlatonicFamily:
    group: Group
    alpha: Number
    beta: Number = 0

    def __post_init__(self):
        g = Group.parse(self.group)
        object.__setattr__(self, "group", g)
        a = float(self.alpha)
        if not (0.0 < a <= g.alpha_max * (1 + 1e-15)):
            raise DomainError(f"alpha = {a!r} outside (0, {g.alpha_max:.15g}] for {g.value}")
        if self.beta != 0 and g is not Group.OCTA:
            raise DomainError("beta is only defined for the k=4 family")


# --- Klein forms and Ansatz curves --------------------------------------------------

_KLEIN = {
    # coefficient of zeta0^(d-j) zeta1^j, indexed by j
    "A4": (0, -1, 0, 0, 0, 1, 0),
    "S4": (1, 0, 0, 0, 14, 0, 0, 0, 1),
    "A5": (0, -1, 0, 0, 0, 0, 11, 0, 0, 0, 0, 1, 0),
}


def klein_form(group) -> tuple[int, ...]:
    """Coefficients (by power of zeta1) of the minimal Klein form of A4, S4 or A5."""
    key = str(group.value if isinstance(group, Group) else group).upper()
    key = {"TETRA": "A4", "OCTA": "S4"}.get(key, key)
    if key not in _KLEIN:
        raise DomainError(f"unknown group {group!r}")
    return _KLEIN[key]


def _ansatz_terms(group: Group, a, b, i, one):
    """Terms {(p, q): coeff of w^p z^q} of the Ansatz polynomial over any ring."""
    t: dict[tuple[int, int], object] = {}

    def add(key, c):
        t[key] = t[key] + c if key in t else c

    k = group.charge
    for p in range(k + 1):
        # (w - z)^k
        add((p, k - p), one * (math.comb(k, p) * (-1) ** (k - p)))
    if group is Group.TETRA:
        # i a (w + z)(w^2 z^2 - 1)
        for key, s in (((3, 2), 1), ((2, 3), 1), ((1, 0), -1), ((0, 1), -1)):
            add(key, i * a * s)
    else:
        for key, c in (((4, 4), 1), ((0, 0), 1), ((2, 2), 6), ((3, 1), 4), ((1, 3), 4)):
            add(key, a * c)
        if b is not None:
            # i b (w^2 - z^2)(w^2 z^2 - 1)
            for key, s in (((4, 2), 1), ((2, 0), -1), ((2, 4), -1), ((0, 2), 1)):
                add(key, i * b * s)
    return t


def ansatz_curve(family: PlatonicFamily) -> BidegreeCurve:
    """Curve of the family; exact entries when alpha (and beta) are rational."""
    g = family.group
    exact = _exact(family.alpha) and _exact(family.beta)
    if exact:
        a, b = GaussianRational(Fraction(family.alpha)), GaussianRational(Fraction(family.beta))
        i, one = GaussianRational(0, 1), GaussianRational(1)
    else:
        a, b, i, one = complex(float(family.alpha)), complex(float(family.beta)), 1j, 1.0 + 0j
    terms = _ansatz_terms(g, a, b if family.beta != 0 else None, i, one)
    return BidegreeCurve.from_terms(g.charge, terms, exact=exact)


def ansatz_polynomial(group) -> dict[tuple[int, int], GaussRationalPoly]:
    """Ansatz with alpha kept symbolic: {(p, q): coefficient in Q(i)[alpha]}."""
    g = Group.parse(group)
    a = GaussRationalPoly.x()
    i = GaussRationalPoly.constant(GaussianRational(0, 1))
    one = GaussRationalPoly.constant(1)
    return _ansatz_terms(g, a, None, i, one)


# --- quotient elliptic curve ---------------------------------------------------------

# invariants and relation data as Laurent polynomials in alpha: {k: c} means sum c alpha^(-k)
_G2 = {
    Group.TETRA: {0: Fraction(1, 12), 2: Fraction(18)},
    # constant term 16/243 (see notes on the printed value)
    Group.OCTA: {0: Fraction(16, 243), 1: Fraction(-16, 27), 2: Fraction(5, 3), 3: Fraction(-4, 3)},
}
_G3 = {
    Group.TETRA: {0: Fraction(-1, 216), 2: Fraction(5, 2), 4: Fraction(27)},
    Group.OCTA: {0: Fraction(64, 19683), 1: Fraction(-32, 729), 2: Fraction(2, 9),
                 3: Fraction(-41, 81), 4: Fraction(4, 9)},
}
_POLE_X = {
    Group.TETRA: {0: Fraction(1, 12), 2: Fraction(-1)},
    Group.OCTA: {0: Fraction(-2, 27), 1: Fraction(-7, 6)},
}


def _laurent(cs: dict, a):
    return sum(c / a ** k for k, c in cs.items())


def _octa_rhs(a):
    return (-4 * a ** 4 + 10 * a ** 3 - 115 * a ** 2 + 60 * a - 3) / (54 * a ** 2 * (a + 1) ** 2)


def _alpha_arg(group: Group, alpha=None, alpha_sq=None):
    """Return the value to feed the Laurent formulas (exact when possible)."""
    if alpha is None and alpha_sq is None:
        raise DomainError("give alpha or alpha_sq")
    if alpha is not None:
        a = Fraction(alpha) if _exact(alpha) else float(alpha)
        if a == 0:
            raise PoleError("alpha = 0 is a pole of the quotient invariants")
        return a, None
    if group is not Group.TETRA:
        raise DomainError("alpha_sq is only meaningful for the tetrahedral family")
    s = Fraction(alpha_sq) if _exact(alpha_sq) else float(alpha_sq)
    if s <= 0:
        raise PoleError("alpha^2 must be positive")
    return None, s


def _tetra_even(cs: dict, s):
    """Evaluate an even Laurent polynomial in alpha through s = alpha^2."""
    return sum(c / s ** (k // 2) for k, c in cs.items())


def quotient_invariants_exact(group, alpha=None, alpha_sq=None) -> tuple[Fraction, Fraction]:
    g = Group.parse(group)
    a, s = _alpha_arg(g, alpha, alpha_sq)
    if a is not None:
        if not isinstance(a, Fraction):
            raise DomainError("exact invariants need a rational alpha (or rational alpha^2)")
        return _laurent(_G2[g], a), _laurent(_G3[g], a)
    if not isinstance(s, Fraction):
        raise DomainError("exact invariants need a rational alpha^2")
    return _tetra_even(_G2[g], s), _tetra_even(_G3[g], s)


def quotient_invariants(group, alpha: float) -> EllipticInvariants:
    g = Group.parse(group)
    a, _ = _alpha_arg(g, float(alpha))
    return EllipticInvariants(float(_laurent(_G2[g], a)), float(_laurent(_G3[g], a)))


def pole_x(group, alpha=None, alpha_sq=None):
    """Common x-coordinate of the images of the poles of dw/w - dz/z."""
    g = Group.parse(group)
    a, s = _alpha_arg(g, alpha, alpha_sq)
    return _laurent(_POLE_X[g], a) if a is not None else _tetra_even(_POLE_X[g], s)


def relation_rhs(group, alpha=None, alpha_sq=None):
    """Right side x_* of the mass relation wp(c varpi1) = x_*."""
    g = Group.parse(group)
    if g is Group.TETRA:
        return pole_x(g, alpha, alpha_sq)
    a, _ = _alpha_arg(g, alpha, alpha_sq)
    return _octa_rhs(a)


def relation_argument(group, m: float) -> float:
    """c in wp(c varpi1): 2/(2m+3) (tetra), 3/(m+2) (octa)."""
    g = Group.parse(group)
    return 2.0 / (2.0 * m + 3.0) if g is Group.TETRA else 3.0 / (m + 2.0)


def _j_closed(g: Group, a=None, s=None):
    if g is Group.TETRA:
        s = a * a if s is None else s
        den = 2 ** 6 * 3 ** 3 * (s - 27) ** 3
        if den == 0:
            raise PoleError("discriminant vanishes (alpha^2 = 27)")
        return s * (s + 216) ** 3 / den
    den = 78732 * (a - 4) ** 2 * (a - 3) ** 3
    if den == 0:
        raise PoleError("discriminant vanishes (alpha in {3, 4})")
    return (16 * a ** 3 - 144 * a ** 2 + 405 * a - 324) ** 3 / den


def j_invariant(group, alpha=None, alpha_sq=None, rtol: float = 1e-10):
    """j = g2^3/(g2^3 - 27 g3^2) by the closed form, cross-checked against the invariants.

    Exact (Fraction) when alpha, or alpha^2 for the tetrahedral family, is
    rational; then the two routes must agree exactly.
    """
    g = Group.parse(group)
    a, s = _alpha_arg(g, alpha, alpha_sq)
    exact = isinstance(a if a is not None else s, Fraction)
    if exact:
        g2, g3 = quotient_invariants_exact(g, alpha, alpha_sq)
    else:
        g2 = _laurent(_G2[g], a) if a is not None else _tetra_even(_G2[g], s)
        g3 = _laurent(_G3[g], a) if a is not None else _tetra_even(_G3[g], s)
    disc = g2 ** 3 - 27 * g3 ** 2
    if disc == 0:
        raise PoleError("discriminant vanishes")
    via_inv = g2 ** 3 / disc
    closed = _j_closed(g, a, s)
    if exact:
        if closed != via_inv:
            raise IntegrityError(f"j closed form {closed} != invariant route {via_inv}")
    elif abs(closed - via_inv) > rtol * max(1.0, abs(via_inv)):
        raise IntegrityError(f"j closed form {closed!r} != invariant route {via_inv!r}")
    return closed


def weighted_relation_data(group) -> tuple[RationalPolynomial, RationalPolynomial,
                                            RationalPolynomial, RationalPolynomial]:
    """Polynomials (D, X, G2, G3) in alpha with x_* = X/D, g2 = G2/D^2, g3 = G3/D^3.

    Division polynomials are weighted homogeneous (x, g2, g3 of weights 1, 2, 3),
    so P_n(x_*, g2, g3) = P_n(X, G2, G3) / D^(deg P_n) with polynomial entries.
    """
    g = Group.parse(group)
    A = RationalPolynomial.x()
    one = RationalPolynomial.constant(1)

    def lift(cs: dict, power: int) -> RationalPolynomial:
        out = RationalPolynomial.constant(0)
        for k, c in cs.items():
            out = out + A ** (power - k) * c
        return out

    if g is Group.TETRA:
        D = A ** 2
        return D, lift(_POLE_X[g], 2), lift(_G2[g], 4), lift(_G3[g], 6)
    ap1 = A + one
    D = A ** 2 * ap1 ** 2
    X = (A ** 4 * -4 + A ** 3 * 10 - A ** 2 * 115 + A * 60 - 3) * Fraction(1, 54)
    return D, X, lift(_G2[g], 4) * ap1 ** 4, lift(_G3[g], 6) * ap1 ** 6


# --- invariants on the curve -------------------------------------------------------------

def tetra_invariants(w: complex, z: complex) -> tuple[complex, complex, complex]:
    """(v^, x^, y^) = (P3/P1^3, P4/P1^4, P6/P1^6)."""
    p1 = w - z
    if p1 == 0:
        raise PoleError("invariants have poles on the diagonal w = z")
    wz = w * z
    s = w + z
    v = s * (wz * wz - 1) / p1 ** 3
    x = (wz ** 4 + w ** 4 + z ** 4 + 12 * wz * wz + 1) / p1 ** 4
    y = (wz ** 6 - (wz * wz + 1) * (s ** 4 + 4 * wz * s * s + wz * wz) + 1) / p1 ** 6
    return v, x, y


def invariants_at_point(group, w: complex, z: complex, alpha: float | None = None):
    """Weierstrass coordinates (x, y) of the image of (w, z) on the quotient curve."""
    g = Group.parse(group)
    v, xh, yh = tetra_invariants(complex(w), complex(z))
    if g is Group.TETRA:
        return xh - 11.0 / 12.0, 2.0 * yh
    if alpha is None:
        raise DomainError("the octahedral quotient map depends on alpha")
    a = float(alpha)
    return 1.5 * v * v + 1.0 / (3.0 * a) - 2.0 / 27.0, math.sqrt(2.0) * 1j * v * yh


def curve_points(family: PlatonicFamily, w: complex) -> np.ndarray:
    """All z with psi(w, z) = 0 for the given w."""
    c = ansatz_curve(family).z_polynomial(complex(w))
    return np.roots(c[::-1])


def weierstrass_residual(family: PlatonicFamily, w: complex, z: complex) -> float:
    """|y^2 - F(x)| / (1 + |x|^3) at the image of (w, z)."""
    inv = quotient_invariants(family.group, float(family.alpha))
    x, y = invariants_at_point(family.group, w, z, family.alpha)
    return abs(y * y - inv.cubic(x)) / (1.0 + abs(x) ** 3)


# --- mass relations ------------------------------------------------------------------------

def _wp_real(u: complex, inv: EllipticInvariants, what: str, tol: float = 1e-9) -> float:
    p = weierstrass_p(u, inv)
    if abs(p.imag) > tol * max(1.0, abs(p.real)):
        raise NumericError(f"{what}: wp has imaginary part {p.imag!r} on a real line")
    return p.real


def _periods(group: Group, alpha: float) -> tuple[EllipticInvariants, HalfPeriods]:
    inv = quotient_invariants(group, alpha)
    require_conjugate_roots(inv)
    return inv, half_periods(inv)


def mass_relation_residual(group, alpha: float, m: float) -> float:
    """wp(c varpi1) - x_*(alpha) with c = 2/(2m+3) or 3/(m+2)."""
    g = Group.parse(group)
    if not m > 0:
        raise DomainError("mass relation residual needs m > 0")
    inv, hp = _periods(g, float(alpha))
    u = relation_argument(g, m) * hp.varpi1
    return _wp_real(u, inv, "mass_relation_residual") - float(relation_rhs(g, float(alpha)))


def branch_residual(group, alpha: float, m: float) -> float:
    """Residual with a simple root in alpha, used for root finding.

    For the octahedral family wp(3 varpi1/(m+2)) folds back at varpi1; the
    pre-duplication form wp(varpi + 3 varpi1/(2(m+2))) = pole_x stays on a
    monotone branch and duplicates exactly to the post-duplication relation.
    """
    g = Group.parse(group)
    inv, hp = _periods(g, alpha)
    if g is Group.TETRA:
        u = relation_argument(g, m) * hp.varpi1
    else:
        u = hp.varpi + 1.5 / (m + 2.0) * hp.varpi1
    return _wp_real(u, inv, "alpha_from_mass") - float(pole_x(g, alpha))


TABLE_ANCHORS = {
    Group.TETRA: ((0.5, 1.0 / math.sqrt(3.0)), (1.0, 2.0 - math.sqrt(3.0)),
                  (1.5, math.sqrt(23.0 - 4.0 * math.sqrt(33.0)))),
    Group.OCTA: ((0.5, 1.0 / 3.0), (1.0, 1.0 / 7.0), (1.5, 7.0 - 4.0 * math.sqrt(3.0))),
}


def _bracket(g: Group, m: float) -> tuple[float, float]:
    anchors = [(0.0, g.alpha_max)] + list(TABLE_ANCHORS[g])
    below = [a for mm, a in anchors if mm <= m]
    above = [a for mm, a in anchors if mm >= m]
    hi = min(below) if below else g.alpha_max
    lo = max(above) if above else None
    if lo is None:
        m_last, a_last = anchors[-1]
        lo = a_last * (m_last / m) ** 3
    return lo, hi


def alpha_from_mass(group, m: float, xtol: float = 1e-15) -> float:
    g = Group.parse(group)
    m = float(m)
    if not (m >= 0.0 and math.isfinite(m)):
        raise DomainError(f"mass must be finite and nonnegative, got {m!r}")
    if m == 0.0:
        return g.alpha_max
    for mm, a in TABLE_ANCHORS[g]:
        if mm == m:
            lo, hi = a * (1 - 1e-3), min(a * (1 + 1e-3), g.alpha_max)
            break
    else:
        lo, hi = _bracket(g, m)
        lo, hi = lo * (1 - 1e-12), hi
    f = lambda a: branch_residual(g, a, m)
    f_hi = f(hi) if hi < g.alpha_max else None
    if f_hi is None:
        hi = g.alpha_max * (1 - 1e-15)
        f_hi = f(hi)
    f_lo = f(lo)
    widen = 0
    while f_lo * f_hi > 0:
        widen += 1
        if widen > 60:
            raise NumericError(f"no sign change bracketing alpha for m = {m!r}")
        lo *= 0.5
        f_lo = f(lo)
    root = brentq(f, lo, hi, xtol=xtol * max(lo, 1e-300), rtol=4 * np.finfo(float).eps,
                  maxiter=200)
    res = mass_relation_residual(g, root, m)
    x_scale = max(1.0, abs(float(relation_rhs(g, root))))
    if abs(res) > 1e-8 * x_scale:
        raise IntegrityError(f"alpha = {root!r} leaves mass residual {res!r}")
    return float(root)


def mass_from_alpha(group, alpha: float) -> float:
    """Invert the mass relation: find c with wp(c varpi1) = x_*, then m."""
    g = Group.parse(group)
    a = float(alpha)
    PlatonicFamily(g, a)
    if abs(a - g.alpha_max) <= 1e-15 * g.alpha_max:
        return 0.0
    inv, hp = _periods(g, a)
    target = float(pole_x(g, a))
    if g is Group.TETRA:
        f = lambda t: _wp_real(t * hp.varpi1, inv, "mass_from_alpha") - target
        t = brentq(f, 1e-9, 1.0 - 1e-12, xtol=1e-16, rtol=4 * np.finfo(float).eps)
        return 1.0 / t - 1.5
    f = lambda s: _wp_real(hp.varpi + s * hp.varpi1, inv, "mass_from_alpha") - target
    s = brentq(f, 1e-12, 1.0 - 1e-9, xtol=1e-16, rtol=4 * np.finfo(float).eps)
    return 1.5 / s - 2.0


# --- cycle integers ------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleIntegers:
    ell1: int
    ell2: int
    ell1_raw: float
    ell2_raw: float
    residual: float
    path_integral: complex


def verify_cycle_integers(group, alpha: float, m: float, tol: float = 1e-6) -> CycleIntegers:
    """Recover (l1, l2) from l1 varpi + l2 varpi' = RHS by real-interval quadrature.

    RHS is 2i(2m+3) int_{x_p}^{-inf} dx/sqrt(-F) for the tetrahedral family and
    4i(m+2) int_{e2}^{x_p} dx/sqrt(-F) for the octahedral one.  Both integers
    are solved for independently and l2 = -2 l1 is then checked.
    """
    g = Group.parse(group)
    a = float(alpha)
    inv, hp = _periods(g, a)
    roots = cubic_roots(inv)
    r = roots.as_array()
    xp = float(pole_x(g, a))
    if g is Group.TETRA:
        J = ray_integral(r, xp, -1.0, negate=True)
        rhs = 2j * (2.0 * m + 3.0) * J
    else:
        J = segment_integral(r, roots.e2, xp, i0=1, negate=True)
        rhs = 4j * (m + 2.0) * J
    wpr = hp.varpi_prime
    # imaginary part fixes l2, real part then fixes l1
    l2f = rhs.imag / wpr.imag
    l1f = (rhs.real - l2f * wpr.real) / hp.varpi
    l1, l2 = round(l1f), round(l2f)
    res = max(abs(l1f - l1), abs(l2f - l2))
    if res >= tol:
        raise IntegrityError(f"cycle integers not integral: ({l1f!r}, {l2f!r})")
    if l2 != -2 * l1:
        raise IntegrityError(f"l2 = {l2} violates l2 = -2 l1 (l1 = {l1})")
    return CycleIntegers(int(l1), int(l2), float(l1f), float(l2f), float(res), complex(rhs))


# --- aggregate ------------------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientCurve:
    group: Group
    alpha: float
    inv: EllipticInvariants
    j: float
    x_pole: float
    rhs: float
    periods: HalfPeriods
    ell1: int | None = None
    ell2: int | None = None


def quotient_curve(group, alpha: float, m: float | None = None) -> QuotientCurve:
    g = Group.parse(group)
    a = float(alpha)
    inv, hp = _periods(g, a)
    ell1 = ell2 = None
    if m is not None and m > 0:
        c = verify_cycle_integers(g, a, m)
        ell1, ell2 = c.ell1, c.ell2
    return QuotientCurve(g, a, inv, float(j_invariant(g, a)), float(pole_x(g, a)),
                         float(relation_rhs(g, a)), hp, ell1, ell2)


# --- euclidean limit -------------------------------------------------------------------------

ALPHA_BAR = math.gamma(1.0 / 3.0) ** 9 / (2 ** 6 * math.pi ** 3)


@dataclass(frozen=True)
class EuclideanTetra:
    alpha_bar: float
    curve: dict          # {(eta power, zeta power): coefficient}
    invariants: EllipticInvariants
    varpi1: complex
    period_gamma: complex

    @property
    def varpi1_defect(self) -> float:
        return abs(self.varpi1 - 1j * self.alpha_bar) / self.alpha_bar

    @property
    def period_gamma_defect(self) -> float:
        """Distance between the Gamma expression and varpi1, up to orientation sign."""
        return min(abs(self.period_gamma - self.varpi1), abs(self.period_gamma + self.varpi1)) \
            / self.alpha_bar


def period_gamma_expression(a: float) -> complex:
    """Closed Gamma-function expression for varpi1 at invariants (0, 27/a^4)."""
    c = 2.0 ** (1.0 / 3.0) * math.sqrt(math.pi) * a ** (2.0 / 3.0)
    rot = complex(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))
    return (-c * rot * math.gamma(1.0 / 3.0) / (3.0 * math.gamma(5.0 / 6.0))
            - c * math.gamma(1.0 / 6.0) / (9.0 * math.sqrt(3.0) * math.gamma(5.0 / 3.0)))


def euclid_limit_tetra() -> EuclideanTetra:
    """Limit alpha m^3 -> alpha_bar and the euclidean curve eta^3 + 2 i abar zeta(zeta^4 - 1)."""
    ab = ALPHA_BAR
    inv = EllipticInvariants(0.0, 27.0 / ab ** 4)
    hp = half_periods(inv)
    curve = {(3, 0): 1.0 + 0j, (0, 5): 2j * ab, (0, 1): -2j * ab}
    return EuclideanTetra(ab, curve, inv, hp.varpi1, period_gamma_expression(ab))


def richardson_alpha_bar(ms=(10.0, 20.0, 40.0)) -> float:
    """Extrapolate m^3 alpha(m) to m -> inf assuming corrections in powers of 1/m."""
    f = [m ** 3 * alpha_from_mass(Group.TETRA, m) for m in ms]
    if len(ms) != 3 or ms[1] != 2 * ms[0] or ms[2] != 2 * ms[1]:
        raise DomainError("Richardson extrapolation needs masses (m, 2m, 4m)")
    r1 = 2 * f[1] - f[0]
    r2 = 2 * f[2] - f[1]
    return (4 * r2 - r1) / 3
