"""Weierstrass elliptic functions for real invariants.

Conventions for the cubic F(x) = 4x^3 - g2 x - g3:

* one real root (discriminant < 0): e2 is the real root, Im e1 > 0, e3 = conj(e1);
  varpi = int_{e2}^inf dx/sqrt(F), varpi' = -i int_{e2}^{e1} dx/sqrt(-F) along
  the straight segment (principal square root pointwise), varpi1 = 2 varpi' - varpi.
* three real roots: e1 > e2 > e3; varpi = int_{e1}^inf dx/sqrt(F) and
  varpi' = i int_{-inf}^{e3} dx/sqrt(-F).

In both cases 2 varpi and 2 varpi' generate the period lattice.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial import Polynomial

from .. import _kernels
from ..errors import ConfigurationError, DomainError, NumericError, PoleError
from ..quadrature import DEFAULT_TOL, integrate_unit

_HALF_PI = 0.5 * math.pi
_N_LAURENT = 64
_R0 = 0.4


@dataclass(frozen=True)
class EllipticInvariants:
    g2: float
    g3: float

    def __post_init__(self):
        g2 = float(self.g2)
        g3 = float(self.g3)
        if not (math.isfinite(g2) and math.isfinite(g3)):
            raise DomainError("invariants must be finite")
        object.__setattr__(self, "g2", g2)
        object.__setattr__(self, "g3", g3)
        scale = max(abs(g2) ** 3, 27.0 * g3 * g3)
        if scale == 0.0 or abs(self.discriminant) <= 1e-14 * scale:
            raise DomainError(f"singular cubic: g2^3 - 27 g3^2 = 0 for (g2, g3) = ({g2}, {g3})")

    @property
    def discriminant(self) -> float:
        return self.g2 ** 3 - 27.0 * self.g3 ** 2

    def cubic(self, x):
        return 4.0 * x ** 3 - self.g2 * x - self.g3


@dataclass(frozen=True)
class CubicRoots:
    e1: complex
    e2: float
    e3: complex
    all_real: bool = False

    def as_array(self) -> np.ndarray:
        return np.array([self.e1, self.e2, self.e3], dtype=np.complex128)


@dataclass(frozen=True)
class HalfPeriods:
    varpi: float
    varpi_prime: complex
    varpi1: complex
    all_real: bool = False

    @property
    def varpi2(self) -> float:
        return self.varpi


def _polish(x: complex, g2: float, g3: float) -> complex:
    for _ in range(3):
        f = 4.0 * x ** 3 - g2 * x - g3
        d = 12.0 * x * x - g2
        if d == 0:
            break
        step = f / d
        x = x - step
        if abs(step) <= 1e-17 * max(1.0, abs(x)):
            break
    return x


def cubic_roots(inv: EllipticInvariants) -> CubicRoots:
    """Roots of 4x^3 - g2 x - g3, ordered per the module conventions."""
    return _cubic_roots(inv.g2, inv.g3)


@lru_cache(maxsize=4096)
def _cubic_roots(g2: float, g3: float) -> CubicRoots:
    p = -g2 / 4.0
    q = -g3 / 4.0
    disc = g2 ** 3 - 27.0 * g3 ** 2
    if disc < 0:
        # one real root; stable Cardano
        d = math.sqrt(-disc / 1728.0)
        t = 0.5 * abs(q) + d
        a = -math.copysign(1.0, q) * t ** (1.0 / 3.0) if q != 0 else d ** (1.0 / 3.0)
        b = -p / (3.0 * a)
        r = a + b
        r = _polish(complex(r, 0.0), g2, g3).real
        # remaining quadratic 4x^2 + 4 r x + (4 r^2 - g2) from synthetic division
        im = 0.5 * math.sqrt(max(3.0 * r * r - g2, 0.0))
        e1 = _polish(complex(-0.5 * r, im), g2, g3)
        e1 = complex(e1.real, abs(e1.imag))
        return CubicRoots(e1=e1, e2=float(r), e3=e1.conjugate(), all_real=False)
    # three real roots: trigonometric form
    m = 2.0 * math.sqrt(-p / 3.0)
    arg = 3.0 * q / (p * m)
    arg = min(1.0, max(-1.0, arg))
    theta = math.acos(arg) / 3.0
    rs = sorted((m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)), reverse=True)
    rs = [_polish(complex(v, 0.0), g2, g3).real for v in rs]
    return CubicRoots(e1=complex(rs[0], 0.0), e2=float(rs[1]), e3=complex(rs[2], 0.0), all_real=True)


# --- Abel-type integrals ------------------------------------------------------

def segment_integral(roots, x0, x1, i0: int = -1, i1: int = -1, negate: bool = False,
                     lead: float = 4.0, tol: float = DEFAULT_TOL) -> complex:
    """Integral of dx / sqrt(+-lead * prod(x - r)) along the straight segment x0 -> x1.

    ``i0``/``i1`` flag which root (index into ``roots``) coincides with an
    endpoint so its factor is formed from exact offsets.

    The square root is taken factor by factor, which keeps it continuous
    along the segment; its global sign is the one that agrees with the
    principal square root of the whole radicand at the midpoint.
    """
    roots = np.asarray(roots, dtype=np.complex128)
    x0 = complex(x0)
    dx = complex(x1) - x0
    if dx == 0:
        return 0j
    radicand_const = (-1.0 if negate else 1.0) * float(lead)
    kinds = np.empty(roots.shape[0], dtype=np.int64)
    shifts = np.zeros(roots.shape[0], dtype=np.complex128)
    for j, r in enumerate(roots):
        if j == i0:
            kinds[j] = 0
        elif j == i1:
            kinds[j] = 1
        else:
            c = (x0 - r) / dx
            shifts[j] = c
            if abs(c.imag) <= 1e-14 * abs(c) and c.real < 0:
                kinds[j] = 3
            else:
                kinds[j] = 2
    pref = cmath.sqrt(radicand_const)
    half = np.array([0.5])
    branch = 1.0 / (_kernels.segment_integrand(dx, pref, shifts, kinds, half, half)[0] / dx)
    xm = x0 + 0.5 * dx
    principal = cmath.sqrt(radicand_const * complex(np.prod(xm - roots)))
    if (principal / branch).real < 0:
        pref = -pref

    def g(ul, ur):
        return _kernels.segment_integrand(dx, pref, shifts, kinds, ul, ur)

    return complex(integrate_unit(g, tol=tol))


def ray_integral(roots, xs, direction: float, i0: int = -1, negate: bool = False,
                 lead: float = 4.0, tol: float = DEFAULT_TOL) -> complex:
    """Integral of dx / sqrt(+-lead * prod(x - r)) from real ``xs`` to ``direction * inf``.

    Uses x = xs + direction * tan(theta)^2, which turns the algebraic endpoint
    singularity (when ``xs`` is the root ``roots[i0]``) and the infinite tail
    into a smooth integrand on [0, pi/2].
    """
    roots = np.asarray(roots, dtype=np.complex128)
    sgn = -1.0 if negate else 1.0
    xs = complex(xs)
    direction = float(direction)

    def g(ul, ur):
        return _HALF_PI * _kernels.ray_integrand(xs, direction, float(lead), roots, i0, sgn,
                                                 _HALF_PI * ul, _HALF_PI * ur)

    return complex(integrate_unit(g, tol=tol))


def half_periods(inv: EllipticInvariants) -> HalfPeriods:
    """Half-periods varpi, varpi', varpi1 = 2 varpi' - varpi (see module docstring)."""
    return _half_periods(inv.g2, inv.g3)


@lru_cache(maxsize=4096)
def _half_periods(g2: float, g3: float) -> HalfPeriods:
    cr = _cubic_roots(g2, g3)
    roots = cr.as_array()
    if not cr.all_real:
        w = ray_integral(roots, cr.e2, 1.0, i0=1).real
        seg = segment_integral(roots, cr.e2, cr.e1, i0=1, i1=0, negate=True)
        wp = -1j * seg
    else:
        w = ray_integral(roots, cr.e1.real, 1.0, i0=0).real
        wp = -1j * ray_integral(roots, cr.e3.real, -1.0, i0=2, negate=True)
        wp = complex(0.0, wp.imag)
    return HalfPeriods(varpi=float(w), varpi_prime=complex(wp), varpi1=complex(2.0 * wp - w),
                       all_real=cr.all_real)


# --- lattice and wp ---------------------------------------------------------------

@dataclass(frozen=True)
class _Lattice:
    w1: complex
    w2: complex
    scale: float           # shortest lattice vector length
    coeffs: np.ndarray     # Laurent coefficients for the normalised invariants
    g2n: float             # g2 * scale^4
    g2: float
    g3: float


def _gauss_reduce(a: complex, b: complex) -> tuple[complex, complex]:
    if abs(a) > abs(b):
        a, b = b, a
    for _ in range(100):
        mu = round((b * a.conjugate()).real / (abs(a) ** 2))
        b = b - mu * a
        if abs(b) >= abs(a):
            break
        a, b = b, a
    return a, b


def laurent_coefficients(g2: float, g3: float, n: int = _N_LAURENT) -> np.ndarray:
    """c_k of wp(u) = u^-2 + sum_{k>=2} c_k u^(2k-2); entries 0, 1 unused."""
    c = np.zeros(n, dtype=np.float64)
    c[2] = g2 / 20.0
    if n > 3:
        c[3] = g3 / 28.0
    for k in range(4, n):
        s = 0.0
        for m in range(2, k - 1):
            s += c[m] * c[k - m]
        c[k] = 3.0 * s / ((2 * k + 1) * (k - 3))
    return c


@lru_cache(maxsize=4096)
def _lattice(g2: float, g3: float) -> _Lattice:
    hp = _half_periods(g2, g3)
    w1, w2 = _gauss_reduce(complex(2.0 * hp.varpi), 2.0 * hp.varpi_prime)
    scale = abs(w1)
    g2n = g2 * scale ** 4
    g3n = g3 * scale ** 6
    coeffs = laurent_coefficients(g2n, g3n)
    coeffs.setflags(write=False)
    return _Lattice(w1=w1, w2=w2, scale=scale, coeffs=coeffs, g2n=g2n, g2=g2, g3=g3)


def reduce_argument(u: complex, inv: EllipticInvariants) -> complex:
    """Representative of u modulo the period lattice with minimal modulus."""
    lat = _lattice(inv.g2, inv.g3)
    return _reduce(complex(u), lat)


def _reduce(u: complex, lat: _Lattice) -> complex:
    w1, w2 = lat.w1, lat.w2
    den = (w1 * w2.conjugate()).imag
    s = (u * w2.conjugate()).imag / den
    t = (u * w1.conjugate()).imag / (-den)
    u0 = u - round(s) * w1 - round(t) * w2
    best = u0
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            cand = u0 + a * w1 + b * w2
            if abs(cand) < abs(best):
                best = cand
    return best


def wp_and_prime(u: complex, inv: EllipticInvariants) -> tuple[complex, complex]:
    """(wp(u), wp'(u)) by Laurent series near the origin plus duplication."""
    lat = _lattice(inv.g2, inv.g3)
    if not (cmath.isfinite(complex(u))):
        raise DomainError("argument must be finite")
    v = _reduce(complex(u), lat) / lat.scale
    r = abs(v)
    if r < 1e-11:
        raise PoleError(f"argument {u!r} lies on the period lattice (distance {r * lat.scale:.3e})")
    nd = max(0, math.ceil(math.log2(r / _R0))) if r > _R0 else 0
    p, dp = _kernels.wp_series_double(v / 2.0 ** nd, lat.coeffs, lat.g2n, nd)
    return complex(p) / lat.scale ** 2, complex(dp) / lat.scale ** 3


def weierstrass_p(u: complex, inv: EllipticInvariants) -> complex:
    return wp_and_prime(u, inv)[0]


def weierstrass_p_prime(u: complex, inv: EllipticInvariants) -> complex:
    return wp_and_prime(u, inv)[1]


def derivative_polynomials(order: int, g2: float, g3: float) -> list[tuple[Polynomial, Polynomial]]:
    """(A_k, B_k) with wp^(k) = A_k(wp) + B_k(wp) wp' for k = 0..order."""
    x = Polynomial([0.0, 1.0])
    F = 4.0 * x ** 3 - g2 * x - g3
    F2 = 6.0 * x ** 2 - 0.5 * g2
    out = [(x, Polynomial([0.0])), (Polynomial([0.0]), Polynomial([1.0]))]
    while len(out) <= order:
        a, b = out[-1]
        out.append((b.deriv() * F + b * F2, a.deriv()))
    return out[: order + 1]


def wp_derivatives(u: complex, inv: EllipticInvariants, order: int) -> list[complex]:
    """[wp(u), wp'(u), ..., wp^(order)(u)]."""
    p, dp = wp_and_prime(u, inv)
    return [complex(a(p) + b(p) * dp) for a, b in derivative_polynomials(order, inv.g2, inv.g3)]


def require_conjugate_roots(inv: EllipticInvariants) -> CubicRoots:
    cr = cubic_roots(inv)
    if cr.all_real:
        raise ConfigurationError(
            f"invariants ({inv.g2}, {inv.g3}) give three real roots; one real and two "
            "conjugate roots are required here")
    return cr


def check_finite(value: complex, what: str) -> complex:
    if not cmath.isfinite(value):
        raise NumericError(f"non-finite {what}")
    return value
