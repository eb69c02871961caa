"""Legendre elliptic integrals of the first kind, Jacobi functions, Landen map."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .. import _kernels
from ..errors import DomainError


@dataclass(frozen=True)
class JacobiValues:
    sn: float
    cn: float
    dn: float


def _check_modulus(kappa: float) -> float:
    kappa = float(kappa)
    if not (0.0 <= kappa < 1.0) or math.isnan(kappa):
        raise DomainError(f"elliptic modulus must lie in [0, 1), got {kappa!r}")
    return kappa


def complete_K(kappa: float) -> float:
    """K(kappa) by the arithmetic-geometric mean, K = pi / (2 AGM(1, kappa'))."""
    return _kernels.complete_k(_check_modulus(kappa))


def incomplete_F(phi: float, kappa: float) -> float:
    """F(phi, kappa) = integral_0^phi dtheta / sqrt(1 - kappa^2 sin^2 theta), 0 <= phi <= pi/2.

    Uses Carlson's form F = sin(phi) R_F(cos^2 phi, 1 - kappa^2 sin^2 phi, 1).
    """
    kappa = _check_modulus(kappa)
    phi = float(phi)
    half_pi = 0.5 * math.pi
    if not (0.0 <= phi <= half_pi + 1e-15):
        raise DomainError(f"amplitude must lie in [0, pi/2], got {phi!r}")
    if phi == 0.0:
        return 0.0
    if phi >= half_pi:
        return complete_K(kappa)
    s = math.sin(phi)
    c = math.cos(phi)
    return s * _kernels.carlson_rf(c * c, (1.0 - kappa * s) * (1.0 + kappa * s), 1.0)


def jacobi_sncndn(u: float, kappa: float) -> JacobiValues:
    """Jacobi sn, cn, dn of real argument via descending Landen transformations."""
    kappa = _check_modulus(kappa)
    u = float(u)
    if not math.isfinite(u):
        raise DomainError("argument must be finite")
    sn, cn, dn = _kernels.sncndn(u, kappa)
    return JacobiValues(float(sn), float(cn), float(dn))


def landen_descend(k: float) -> float:
    """Return kappa in (0, k) with k = 2 sqrt(kappa)/(1 + kappa).

    Then K(k) = (1 + kappa) K(kappa).
    """
    k = float(k)
    if not (0.0 < k < 1.0):
        raise DomainError(f"Landen descent needs 0 < k < 1, got {k!r}")
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    # (1 - k')/(1 + k') written without cancellation
    return k * k / (1.0 + kp) ** 2


def landen_ascend(kappa: float) -> float:
    """Inverse of :func:`landen_descend`: k = 2 sqrt(kappa)/(1 + kappa)."""
    kappa = float(kappa)
    if not (0.0 < kappa < 1.0):
        raise DomainError(f"Landen ascent needs 0 < kappa < 1, got {kappa!r}")
    return 2.0 * math.sqrt(kappa) / (1.0 + kappa)
