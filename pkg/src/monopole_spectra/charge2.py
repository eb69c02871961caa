"""Charge-2 spectral curves as functions of the mass.

The centred curve in standard form is

    kappa sn^2(rho) (w^2 z^2 + 1) + 2 cn(rho) dn(rho) w z - (w^2 + z^2) = 0,
    rho = K(kappa) / (m + 1),

with Jacobi functions of modulus kappa.  This module builds it, the chain of
auxiliary parameters, the reciprocity check that pins rho, and the limiting
curves (axial, nullaron, infinite separation, euclidean).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

import numpy as np

from .curves import BidegreeCurve
from .errors import DomainError, NumericError
from .exact import GaussianRational
from .special_functions import (
    complete_K,
    incomplete_F,
    jacobi_sncndn,
    landen_ascend,
    segment_integral,
)


def _is_exact_number(x) -> bool:
    return isinstance(x, (Rational, GaussianRational)) and not isinstance(x, bool)


def _check_mass(m: float) -> float:
    m = float(m)
    if not (m >= 0.0) or not math.isfinite(m):
        raise DomainError(f"mass must be a finite nonnegative number, got {m!r}")
    return m


def _check_kappa(kappa: float, open_left: bool = False) -> float:
    kappa = float(kappa)
    lo_ok = kappa > 0.0 if open_left else kappa >= 0.0
    if not (lo_ok and kappa < 1.0):
        rng = "(0, 1)" if open_left else "[0, 1)"
        raise DomainError(f"kappa must lie in {rng}, got {kappa!r}")
    return kappa


def _symmetric_quartic(a, b, c, exact: bool = False) -> BidegreeCurve:
    """a (w^2 z^2 + 1) + b w z + c (w^2 + z^2)."""
    return BidegreeCurve.from_terms(
        2, {(2, 2): a, (0, 0): a, (1, 1): b, (2, 0): c, (0, 2): c}, exact=exact)


# --- curves ---------------------------------------------------------------------

def star_line(x1, x2, x3) -> BidegreeCurve:
    """Bidegree (1,1) curve of oriented geodesics through (x1, x2, x3) in upper half-space.

    (x1 - i x2) w z - (x1^2 + x2^2 + x3^2) w + z - (x1 + i x2) = 0.
    Exact when all coordinates are rationals.
    """
    exact = all(_is_exact_number(x) for x in (x1, x2, x3))
    if exact:
        x1, x2, x3 = (Fraction(x) for x in (x1, x2, x3))
        i = GaussianRational(0, 1)
    else:
        x1, x2, x3 = (float(x) for x in (x1, x2, x3))
        i = 1j
    if not x3 > 0:
        raise DomainError(f"x3 must be positive (upper half-space), got {x3!r}")
    return BidegreeCurve.from_terms(1, {
        (1, 1): x1 - i * x2,
        (1, 0): -(x1 * x1 + x2 * x2 + x3 * x3),
        (0, 1): 1,
        (0, 0): -(x1 + i * x2),
    }, exact=exact)


def curve_from_mass(m: float, kappa: float) -> BidegreeCurve:
    m = _check_mass(m)
    kappa = _check_kappa(kappa)
    if kappa == 0.0:
        return _symmetric_quartic(0.0, 2.0 * math.cos(math.pi / (2.0 * (m + 1.0))), -1.0)
    if m == 0.0:
        return _symmetric_quartic(kappa, 0.0, -1.0)
    rho = complete_K(kappa) / (m + 1.0)
    j = jacobi_sncndn(rho, kappa)
    return _symmetric_quartic(kappa * j.sn ** 2, 2.0 * j.cn * j.dn, -1.0)


def curve_m1_closed(kappa: float) -> BidegreeCurve:
    """m = 1 curve from the half-period values sn^2(K/2) = 1/(1+k'), cn dn = k'/sqrt(1+k')."""
    kappa = _check_kappa(kappa)
    kp = math.sqrt((1.0 - kappa) * (1.0 + kappa))
    return _symmetric_quartic(kappa / (1.0 + kp), 2.0 * kp / math.sqrt(1.0 + kp), -1.0)


def limit_axial(m: float) -> BidegreeCurve:
    """w^2 - 2 cos(pi / (2(m+1))) w z + z^2."""
    m = _check_mass(m)
    c = math.cos(math.pi / (2.0 * (m + 1.0)))
    return BidegreeCurve.from_terms(2, {(2, 0): 1.0, (1, 1): -2.0 * c, (0, 2): 1.0})


def axial_factors(m: float) -> tuple[complex, complex]:
    """Slopes s with limit_axial(m) = (w - s_+ z)(w - s_- z)."""
    t = math.pi / (2.0 * (_check_mass(m) + 1.0))
    return complex(math.cos(t), math.sin(t)), complex(math.cos(t), -math.sin(t))


def limit_nullaron(kappa) -> BidegreeCurve:
    """kappa (w^2 z^2 + 1) - (w^2 + z^2); exact for rational kappa."""
    if _is_exact_number(kappa):
        k = Fraction(kappa)
        if not 0 <= k < 1:
            raise DomainError(f"kappa must lie in [0, 1), got {kappa!r}")
        return _symmetric_quartic(k, 0, -1, exact=True)
    return _symmetric_quartic(_check_kappa(kappa), 0.0, -1.0)


def limit_separation() -> BidegreeCurve:
    """(w^2 - 1)(z^2 - 1), exact."""
    return _symmetric_quartic(1, 0, -1, exact=True)


# --- parameter chain --------------------------------------------------------------

@dataclass(frozen=True)
class Charge2Derived:
    m: float
    kappa: float
    rho: float
    u: float
    v: float
    lam: float
    LambdaSq: float
    alpha: float
    beta: float

    @property
    def lambda_sum(self) -> float:
        """lambda + 1/lambda."""
        return self.lam + 1.0 / self.lam

    def invariant_defects(self) -> dict[str, float]:
        u, v, a = self.u, self.v, self.alpha
        return {
            "u_from_alpha": abs(u - (a + 1.0 / a)) / u,
            "v_from_kappa": abs(v - (self.kappa + 1.0 / self.kappa)) / v,
            "beta": abs(u - v - a * self.beta ** 2) / u,
            "lambda": abs(self.lambda_sum - (u * v - 4.0) / (u - v)) / self.lambda_sum,
            "LambdaSq": abs(self.LambdaSq - (u * u - 2.0 * u * v + 4.0) / (2.0 * (u - v)))
                        / self.LambdaSq,
        }


def derived_params(m: float, kappa: float) -> Charge2Derived:
    m = _check_mass(m)
    kappa = float(kappa)
    if kappa == 0.0:
        raise DomainError("alpha is undefined at kappa = 0; use limit_axial for the axial curve")
    kappa = _check_kappa(kappa, open_left=True)
    K = complete_K(kappa)
    rho = K / (m + 1.0)
    half = jacobi_sncndn(0.5 * rho, kappa)
    alpha = 1.0 / (kappa * half.sn ** 2)
    u = alpha + 1.0 / alpha
    v = kappa + 1.0 / kappa
    if not u > v:
        raise NumericError(f"u = {u!r} does not exceed v = {v!r}")
    j = jacobi_sncndn(rho, kappa)
    if m == 0.0:
        Lsq = 0.0
        s = 2.0 / (kappa * j.sn ** 2)
    else:
        Lsq = 2.0 * j.cn * j.dn / (kappa * j.sn ** 2)
        s = 2.0 * (1.0 - j.cn * j.dn) / (kappa * j.sn ** 2)
    # root in (0, 1) of lam + 1/lam = s, written without cancellation
    lam = 2.0 / (s + math.sqrt((s - 2.0) * (s + 2.0)))
    beta = math.sqrt((u - v) / alpha)
    return Charge2Derived(m=m, kappa=kappa, rho=rho, u=u, v=v, lam=lam,
                          LambdaSq=Lsq, alpha=alpha, beta=beta)


def diagonal_roots(m: float, kappa: float) -> np.ndarray:
    """Roots of psi(z, z) = 0 sorted by modulus."""
    c = curve_from_mass(m, kappa).diagonal_polynomial()
    roots = np.roots(c[::-1])
    return roots[np.argsort(np.abs(roots), kind="stable")]


def pair_reciprocal_roots(roots, tol: float = 1e-8) -> list[tuple[complex, complex]]:
    """Match roots as (r, 1/r); raises NumericError if some root has no partner."""
    rest = list(sorted(roots, key=abs))
    pairs = []
    while rest:
        r = rest.pop(0)
        if abs(r) == 0:
            raise NumericError("zero root cannot be paired")
        target = 1.0 / r
        idx = min(range(len(rest)), key=lambda i: abs(rest[i] - target), default=None)
        if idx is None or abs(rest[idx] - target) > tol * max(1.0, abs(target)):
            raise NumericError(f"root {r!r} has no reciprocal partner")
        pairs.append((r, rest.pop(idx)))
    return pairs


# --- reciprocity ------------------------------------------------------------------

@dataclass(frozen=True)
class Charge2Verification:
    I1: float
    I2: float
    mass_residual: float
    ell1: int
    ell2: int
    I1_closed: float
    I2_closed: float
    a_period: complex
    ell_residual: float


def verify_triviality(m: float, kappa: float) -> Charge2Verification:
    """Quadrature check of the reciprocity relation for the charge-2 curve.

    With F(t) = 4 alpha (t^2 - kappa)(t^2 - 1/kappa) the relation reads
    l1 A + l2 B = 4 (m+1) (I1 - 2 I2), where B = -2 I1 and A is the purely
    imaginary period over the gap (sqrt(kappa), 1/sqrt(kappa)).
    """
    d = derived_params(m, kappa)
    a, k = d.alpha, d.kappa
    sk, isk = math.sqrt(k), 1.0 / math.sqrt(k)
    roots = np.array([-isk, -sk, sk, isk])
    lead = 4.0 * a
    I1c = segment_integral(roots, -sk, sk, i0=1, i1=2, lead=lead)
    I2c = segment_integral(roots, isk, math.sqrt(a), i0=3, lead=lead)
    A = 2j * segment_integral(roots, sk, isk, i0=2, i1=3, lead=lead, negate=True)
    if abs(I1c.imag) > 1e-12 * abs(I1c) or abs(I2c.imag) > 1e-12 * abs(I2c):
        raise NumericError("real-interval integrals acquired an imaginary part")
    I1, I2 = I1c.real, I2c.real
    B = -2.0 * I1
    rhs = 4.0 * (d.m + 1.0) * (I1c - 2.0 * I2c)
    # A is imaginary and B real: split the relation into its two real equations
    l1f = rhs.imag / A.imag
    l2f = (rhs.real - l1f * A.real) / B
    l1, l2 = round(l1f), round(l2f)
    ell_res = max(abs(l1f - l1), abs(l2f - l2))
    K = complete_K(k)
    phi = math.asin(min(1.0, 1.0 / math.sqrt(a * k)))
    Fphi = incomplete_F(phi, k)
    pref = math.sqrt(k / a)
    return Charge2Verification(
        I1=I1, I2=I2,
        mass_residual=Fphi - K / (2.0 * (d.m + 1.0)),
        ell1=int(l1), ell2=int(l2),
        I1_closed=pref * K,
        I2_closed=0.5 * pref * (K - Fphi),
        a_period=complex(A),
        ell_residual=float(ell_res),
    )


# --- euclidean limit --------------------------------------------------------------

@dataclass(frozen=True)
class EuclideanQuartic:
    """eta^2 + c4 zeta^4 + c3 zeta^3 + c2 zeta^2 + c1 zeta + c0 = 0 (coeffs low degree first)."""
    kappa: float
    k: float
    coeffs: tuple
    standard_coeffs: tuple
    max_deviation: float

    @property
    def branch_points(self) -> np.ndarray:
        r = np.roots(self.coeffs[::-1])
        return np.sort_complex(r)


def euclid_limit_charge2(kappa: float) -> EuclideanQuartic:
    kappa = _check_kappa(kappa, open_left=True)
    K = complete_K(kappa)
    # -K^2 (zeta^2 - kappa)(kappa zeta^2 - 1)
    c = (-K * K * kappa, 0.0, K * K * (1.0 + kappa * kappa), 0.0, -K * K * kappa)
    k = landen_ascend(kappa)
    Kk = complete_K(k)
    q = Kk * Kk / 4.0
    std = (-q * k * k, 0.0, 2.0 * q * (2.0 - k * k), 0.0, -q * k * k)
    dev = max(abs(a - b) for a, b in zip(c, std))
    return EuclideanQuartic(kappa=kappa, k=k, coeffs=c, standard_coeffs=std, max_deviation=dev)


# --- nullarons ---------------------------------------------------------------------

def _poly_values(cs):
    exact = all(_is_exact_number(c) for c in cs)
    if exact:
        return [GaussianRational.coerce(c) for c in cs], True
    return [complex(c) for c in cs], False


def _common_root(numer: np.ndarray, denom: np.ndarray, tol: float = 1e-9) -> bool:
    """True if the polynomials (low degree first) share a root, infinity included."""
    def trim(p):
        nz = np.nonzero(np.abs(p) > 0)[0]
        return p[: nz[-1] + 1] if nz.size else p[:0]
    n, d = trim(numer), trim(denom)
    if n.size == 0 or d.size == 0:
        return True
    k = max(n.size, d.size) - 1
    if n.size - 1 < k and d.size - 1 < k:
        return True
    for p, q in ((n, d), (d, n)):
        if p.size < 2:
            continue
        scale = np.abs(q).max()
        for r in np.roots(p[::-1]):
            val = np.polyval(q[::-1], r) / (scale * max(1.0, abs(r)) ** (q.size - 1))
            if abs(val) < tol:
                return True
    return False


def nullaron_from_rational_map(numer: Sequence, denom: Sequence) -> BidegreeCurve:
    """Curve {(w, z): hat(R(w)) = R(hat z)} of a degree-k rational map R = numer/denom.

    Coefficients are given low degree first.  With hat(z) = -1/conj(z) the
    relation becomes N(w) N~(z) + D(w) D~(z) = 0 where
    P~(z) = z^k conj(P)(-1/z).  The result is normalised so that its
    largest-modulus coefficient is 1.  Exact for rational/Gaussian-rational input.
    """
    n_raw, d_raw = list(numer), list(denom)
    k = max(len(n_raw), len(d_raw)) - 1
    if k < 1:
        raise DomainError("rational map must have positive degree")
    n_raw += [0] * (k + 1 - len(n_raw))
    d_raw += [0] * (k + 1 - len(d_raw))
    if _common_root(np.array(n_raw, dtype=complex), np.array(d_raw, dtype=complex)):
        raise DomainError("numerator and denominator share a root or the degree drops")
    (n, ex1), (d, ex2) = _poly_values(n_raw), _poly_values(d_raw)
    exact = ex1 and ex2
    if not exact:
        n, d = [complex(c) for c in n], [complex(c) for c in d]

    def tilde(p):
        # coefficient of z^(k-j) is (-1)^j conj(p_j)
        out = [None] * (k + 1)
        for j, c in enumerate(p):
            out[k - j] = c.conjugate() * (-1) ** j
        return out

    nt, dt = tilde(n), tilde(d)
    mat = [[n[i] * nt[j] + d[i] * dt[j] for j in range(k + 1)] for i in range(k + 1)]
    return BidegreeCurve(k, mat).normalized()
