"""Hot numerical kernels.

Scalar kernels are written once in numba-compatible Python and compiled when
JIT is enabled.  Array kernels (quadrature integrands) have a compiled loop
version and a vectorised numpy version; :data:`segment_integrand` and
:data:`ray_integrand` point at whichever one the backend selects.
"""
import cmath
import math

import numpy as np

from ._accel import JIT_ENABLED, kernel


@kernel
def agm(a, b):
    """Arithmetic-geometric mean of two positive reals."""
    for _ in range(64):
        if abs(a - b) <= 1e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


@kernel
def complete_k(k):
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return math.pi / (2.0 * agm(1.0, kp))


@kernel
def carlson_rf(x, y, z):
    """Carlson's symmetric integral R_F by duplication (Carlson 1995)."""
    for _ in range(200):
        sx = math.sqrt(x)
        sy = math.sqrt(y)
        sz = math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        ave = (x + y + z) / 3.0
        dx = (ave - x) / ave
        dy = (ave - y) / ave
        dz = (ave - z) / ave
        if max(abs(dx), abs(dy), abs(dz)) < 0.0008:
            break
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / math.sqrt(ave)


@kernel
def sncndn(u, k):
    """Jacobi sn, cn, dn for real u and 0 <= k < 1 via descending Landen."""
    mus = np.empty(32)
    n = 0
    kk = k
    while kk > 1e-17 and n < 32:
        kp = math.sqrt((1.0 - kk) * (1.0 + kk))
        mu = (1.0 - kp) / (1.0 + kp)
        mus[n] = mu
        n += 1
        u = u / (1.0 + mu)
        kk = mu
    sn = math.sin(u)
    cn = math.cos(u)
    dn = 1.0
    for i in range(n - 1, -1, -1):
        mu = mus[i]
        den = 1.0 + mu * sn * sn
        sn, cn, dn = (1.0 + mu) * sn / den, cn * dn / den, (1.0 - mu * sn * sn) / den
    return sn, cn, dn


@kernel
def wp_series_double(v, coeffs, g2, ndouble):
    """Laurent series of (wp, wp') at small v followed by ``ndouble`` doublings.

    ``coeffs[k]`` holds c_k for k >= 2 (entries 0 and 1 are ignored).
    """
    v2 = v * v
    p = 1.0 / v2
    dp = -2.0 / (v2 * v)
    lead = abs(p)
    vp = 1.0 + 0.0j  # v^(2k-4)
    small = 0
    for k in range(2, coeffs.shape[0]):
        term = coeffs[k] * vp * v2
        p += term
        dp += (2 * k - 2) * term / v
        # c_k vanishes identically for some k when g2 or g3 is zero, so
        # require three consecutive negligible terms before stopping
        if abs(term) < 1e-18 * lead:
            small += 1
            if small == 3:
                break
        else:
            small = 0
        vp = vp * v2
    for _ in range(ndouble):
        lam = (6.0 * p * p - 0.5 * g2) / dp
        p2 = 0.25 * lam * lam - 2.0 * p
        dp = -(dp + lam * (p2 - p))
        p = p2
    return p, dp


@kernel
def _segment_loop(dx, pref, shifts, kinds, ul, ur):
    # kinds[j]: 0 -> factor t*dx, 1 -> factor -(1-t)*dx, 2 -> dx*(shifts[j] + t),
    # 3 -> same as 2 but shifts[j] is real negative (stay on the upper branch)
    out = np.empty(ul.shape[0], dtype=np.complex128)
    sdx = cmath.sqrt(dx)
    smdx = cmath.sqrt(-dx)
    for n in range(ul.shape[0]):
        prod = pref
        for j in range(kinds.shape[0]):
            kd = kinds[j]
            if kd == 0:
                prod *= sdx * math.sqrt(ul[n])
            elif kd == 1:
                prod *= smdx * math.sqrt(ur[n])
            elif kd == 2:
                prod *= sdx * cmath.sqrt(shifts[j] + ul[n])
            else:
                prod *= sdx * 1j * math.sqrt(-(shifts[j].real + ul[n]))
        out[n] = dx / prod
    return out


def _segment_numpy(dx, pref, shifts, kinds, ul, ur):
    prod = np.full(ul.shape, pref, dtype=np.complex128)
    sdx = np.sqrt(complex(dx))
    smdx = np.sqrt(complex(-dx))
    for j in range(kinds.shape[0]):
        kd = kinds[j]
        if kd == 0:
            prod = prod * (sdx * np.sqrt(ul))
        elif kd == 1:
            prod = prod * (smdx * np.sqrt(ur))
        elif kd == 2:
            prod = prod * (sdx * np.sqrt(shifts[j] + ul))
        else:
            prod = prod * (sdx * 1j * np.sqrt(-(shifts[j].real + ul)))
    return dx / prod


@kernel
def _ray_loop(xs, direction, lead, roots, i0, sgn, theta_l, theta_r):
    out = np.empty(theta_l.shape[0], dtype=np.complex128)
    deg = roots.shape[0]
    for n in range(theta_l.shape[0]):
        s = math.sin(theta_l[n])
        c = math.sin(theta_r[n])
        prod = sgn * lead + 0.0j
        for j in range(deg):
            if j == i0:
                prod *= direction
            else:
                prod *= (xs - roots[j]) * c * c + direction * s * s
        if i0 >= 0:
            out[n] = 2.0 * direction * c ** (deg - 3) / cmath.sqrt(prod)
        else:
            out[n] = 2.0 * direction * s * c ** (deg - 3) / cmath.sqrt(prod)
    return out


def _ray_numpy(xs, direction, lead, roots, i0, sgn, theta_l, theta_r):
    s = np.sin(theta_l)
    c = np.sin(theta_r)
    deg = roots.shape[0]
    prod = np.full(s.shape, sgn * lead, dtype=np.complex128)
    for j in range(deg):
        if j == i0:
            prod = prod * direction
        else:
            prod = prod * ((xs - roots[j]) * c * c + direction * s * s)
    num = 2.0 * direction * c ** (deg - 3)
    if i0 < 0:
        num = num * s
    return num / np.sqrt(prod)


if JIT_ENABLED:
    segment_integrand = _segment_loop
    ray_integrand = _ray_loop
else:
    segment_integrand = _segment_numpy
    ray_integrand = _ray_numpy
