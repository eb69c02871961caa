"""Cech matrices of multiplication by the curve polynomial, and their determinants.

For a curve psi of bidegree (k, k) and a level r >= 0, multiplication by psi
maps H^1 classes represented by Laurent monomials w^(-i) z^s
(1 <= i <= k+r+1, 0 <= s <= r) to classes w^(-i') z^j (1 <= i' <= r+1,
0 <= j <= k+r); monomials outside that window are coboundaries and dropped.
The resulting square matrix has entries in Q(i)[alpha].  Its determinant
vanishes exactly at the parameters where the cohomology jumps, which is how
half-integer masses m = r/2 pin alpha.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .errors import DomainError, IntegrityError, ResourceError
from .exact import GaussianRational, GaussRationalPoly, RationalPolynomial, rational_interpolate
from .platonic import Group, alpha_from_mass, ansatz_polynomial

MAX_LEVEL = 8


@dataclass(frozen=True)
class CechMatrix:
    group: Group
    r: int
    rows: tuple        # codomain basis (i', j): w^(-i') z^j
    cols: tuple        # domain basis (i, s): w^(-i) z^s
    entries: tuple     # entries[row][col], GaussRationalPoly in alpha

    @property
    def size(self) -> int:
        return len(self.rows)

    def evaluate(self, alpha) -> list[list]:
        """Entries at a given alpha (exact for exact alpha, complex for floats)."""
        return [[e(alpha) for e in row] for row in self.entries]

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "CechMatrix":
        rows = tuple(self.rows[i] for i in row_order)
        cols = tuple(self.cols[j] for j in col_order)
        ent = tuple(tuple(self.entries[i][j] for j in col_order) for i in row_order)
        return CechMatrix(self.group, self.r, rows, cols, ent)

    def entry_multiset(self) -> list[str]:
        return sorted(str(e) for row in self.entries for e in row if not e.is_zero())


def multiplication_matrix(group, r: int) -> CechMatrix:
    g = Group.parse(group)
    if not isinstance(r, int) or r < 0:
        raise DomainError(f"level r must be a nonnegative integer, got {r!r}")
    if r > MAX_LEVEL:
        raise ResourceError(f"level r = {r} exceeds the exact-arithmetic budget r <= {MAX_LEVEL}")
    k = g.charge
    psi = ansatz_polynomial(g)
    cols = tuple((i, s) for i in range(1, k + r + 2) for s in range(r + 1))
    rows = tuple((ip, j) for ip in range(1, r + 2) for j in range(k + r + 1))
    index = {b: n for n, b in enumerate(rows)}
    zero = GaussRationalPoly()
    ent = [[zero] * len(cols) for _ in rows]
    for c, (i, s) in enumerate(cols):
        for (p, q), coeff in psi.items():
            we, ze = p - i, q + s
            if -(r + 1) <= we <= -1 and 0 <= ze <= k + r:
                row = index[(-we, ze)]
                ent[row][c] = ent[row][c] + coeff
    return CechMatrix(g, r, rows, cols, tuple(tuple(row) for row in ent))


# --- determinants --------------------------------------------------------------------------

def _bareiss(m: list[list], zero, exact_div) -> object:
    """Fraction-free Gaussian elimination; returns the determinant."""
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = None
    for k in range(n - 1):
        if a[k][k] == zero:
            for i in range(k + 1, n):
                if a[i][k] != zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = a[i][j] * p - a[i][k] * a[k][j]
                a[i][j] = v if prev is None else exact_div(v, prev)
        prev = p
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


class _GaussInt:
    """Minimal Gaussian integer for pointwise elimination."""

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int = 0):
        self.re, self.im = re, im

    def __mul__(self, o):
        return _GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __sub__(self, o):
        return _GaussInt(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return _GaussInt(-self.re, -self.im)

    def __eq__(self, o):
        return self.re == o.re and self.im == o.im

    def __ne__(self, o):
        return not self == o

    @staticmethod
    def div(a, b):
        nrm = b.re * b.re + b.im * b.im
        re = a.re * b.re + a.im * b.im
        im = a.im * b.re - a.re * b.im
        if re % nrm or im % nrm:
            raise ArithmeticError("Gaussian integer division is not exact")
        return _GaussInt(re // nrm, im // nrm)


def _pointwise_det(mat: CechMatrix, alpha: int) -> GaussianRational:
    vals = [[GaussianRational.coerce(v) for v in row] for row in mat.evaluate(Fraction(alpha))]
    den = 1
    for row in vals:
        for v in row:
            den = math.lcm(den, v.re.denominator, v.im.denominator)
    ints = [[_GaussInt(int(v.re * den), int(v.im * den)) for v in row] for row in vals]
    d = _bareiss(ints, _GaussInt(0), _GaussInt.div)
    scale = Fraction(1, den ** mat.size)
    return GaussianRational(d.re * scale, d.im * scale)


def det_poly_interpolated(mat: CechMatrix) -> GaussRationalPoly:
    """Determinant from exact values at alpha = 0..n and Newton interpolation.

    Each entry has degree <= 1 in alpha, so the determinant has degree <= n.
    """
    deg_bound = mat.size * max(e.degree for row in mat.entries for e in row)
    xs = list(range(deg_bound + 1))
    ys = [_pointwise_det(mat, x) for x in xs]
    re = rational_interpolate(xs, [y.re for y in ys])
    im = rational_interpolate(xs, [y.im for y in ys])
    return GaussRationalPoly.from_parts(re, im)


def det_poly_bareiss(mat: CechMatrix) -> GaussRationalPoly:
    """Determinant by Bareiss elimination directly over Q(i)[alpha]."""
    return _bareiss([list(r) for r in mat.entries], GaussRationalPoly(),
                    lambda a, b: a.exact_div(b))


def det_poly(mat: CechMatrix, method: str = "interpolate") -> GaussRationalPoly:
    if method == "interpolate":
        return det_poly_interpolated(mat)
    if method == "bareiss":
        return det_poly_bareiss(mat)
    raise DomainError(f"unknown determinant method {method!r}")


def real_det(mat: CechMatrix, method: str = "interpolate") -> RationalPolynomial:
    """The determinant as a real polynomial after removing a unit factor in {1, i}."""
    d = det_poly(mat, method)
    if d.is_real():
        return d.real_part()
    if all(c.re == 0 for c in d.coeffs):
        return d.imag_part()
    raise IntegrityError("determinant is not a unit multiple of a real polynomial")


# --- kernel dimension over a number field ------------------------------------------------

def _poly_inverse_mod(a: GaussRationalPoly, f: GaussRationalPoly) -> GaussRationalPoly:
    r0, r1 = f, a % f
    s0, s1 = GaussRationalPoly(), GaussRationalPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ArithmeticError("element is not invertible modulo the minimal polynomial")
    return (s0 * GaussRationalPoly([GaussianRational(1) / r0.leading])) % f


def kernel_dimension(mat: CechMatrix, minpoly: RationalPolynomial) -> int:
    """Dimension of the kernel of the matrix over Q(i)[alpha]/(minpoly).

    ``minpoly`` must be irreducible over Q(i) so that the quotient is a field.
    """
    f = GaussRationalPoly(minpoly.coeffs)
    a = [[e % f for e in row] for row in mat.entries]
    n = mat.size
    rank = 0
    col = 0
    for col in range(n):
        piv = next((i for i in range(rank, n) if not a[i][col].is_zero()), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = _poly_inverse_mod(a[rank][col], f)
        a[rank] = [(e * inv) % f for e in a[rank]]
        for i in range(n):
            if i != rank and not a[i][col].is_zero():
                c = a[i][col]
                a[i] = [(x - c * y) % f for x, y in zip(a[i], a[rank])]
        rank += 1
    return n - rank


# --- half-integer masses ------------------------------------------------------------------

@dataclass(frozen=True)
class HalfIntegerAlpha:
    group: Group
    r: int
    mass: Fraction
    alpha: float
    minimal_polynomial: RationalPolynomial
    new_factor: RationalPolynomial
    candidates: tuple
    determinant: RationalPolynomial


def _high_precision_root(ints: Sequence[int], approx: float, dps: int):
    """Newton-polish a simple real root, then certify it by an exact sign change."""
    p = RationalPolynomial(list(ints))
    with mpmath.workdps(dps + 20):
        cs = [mpmath.mpf(c) for c in reversed(ints)]
        dcs = [c * (len(cs) - 1 - k) for k, c in enumerate(cs[:-1])]
        x = mpmath.mpf(approx)
        for _ in range(200):
            step = mpmath.polyval(cs, x) / mpmath.polyval(dcs, x)
            x -= step
            if abs(step) <= abs(x) * mpmath.mpf(10) ** (-dps - 10):
                break
        eps = abs(x) * mpmath.mpf(10) ** (-dps) + mpmath.mpf(10) ** (-dps)
        lo = Fraction(mpmath.nstr(x - eps, dps + 15, strip_zeros=False))
        hi = Fraction(mpmath.nstr(x + eps, dps + 15, strip_zeros=False))
    if p.sign_at(lo) * p.sign_at(hi) > 0:
        raise IntegrityError(f"root near {approx!r} could not be certified to {dps} digits")
    return x


def minimal_polynomial_of_root(p: RationalPolynomial, root: float,
                               max_degree: int = 24) -> RationalPolynomial:
    """Smallest-degree integer factor of ``p`` vanishing at the given real root.

    Candidates come from an integer-relation search on a high-precision
    polish of the root; a candidate is accepted only if it divides ``p``
    exactly.  Without a hit up to ``max_degree`` the squarefree part is returned.
    """
    sq = p.squarefree_part()
    _, ints = sq.primitive_integer()
    top = min(sq.degree, max_degree)
    dps = 40 + 14 * top
    x = _high_precision_root(ints, root, dps)
    for deg in range(1, top + 1):
        with mpmath.workdps(30 + 14 * deg):
            rel = mpmath.findpoly(+x, deg, maxcoeff=10 ** 12, maxsteps=50000)
        if rel is None:
            continue
        cand = RationalPolynomial(list(reversed([int(c) for c in rel])))
        if cand.degree == deg and cand.divides(sq):
            return RationalPolynomial(cand.primitive_integer()[1])
    return RationalPolynomial(ints)


def new_factor(group, r: int, method: str = "interpolate") -> tuple[RationalPolynomial, RationalPolynomial]:
    """(det Psi_r, part of its squarefree kernel not shared with any det Psi_r', r' < r)."""
    g = Group.parse(group)
    d = real_det(multiplication_matrix(g, r), method)
    new = d.squarefree_part()
    for rp in range(r):
        prev = real_det(multiplication_matrix(g, rp), method)
        while True:
            c = new.gcd(prev)
            if c.degree <= 0:
                break
            new = new.exact_div(c)
    return d, RationalPolynomial(new.primitive_integer()[1])


def half_integer_alpha(group, r: int, tol: float = 1e-8) -> HalfIntegerAlpha:
    """alpha for m = r/2 from the new vanishing locus of det Psi_r."""
    g = Group.parse(group)
    if not isinstance(r, int) or r < 1:
        raise DomainError("half_integer_alpha needs a positive integer level r")
    det, fac = new_factor(g, r)
    roots = fac.real_roots_in(0, Fraction(g.alpha_max) + Fraction(1, 10 ** 9), grid=4096)
    roots = [x for x in roots if 0 < x <= g.alpha_max * (1 + 1e-12)]
    target = alpha_from_mass(g, r / 2)
    best = min(roots, key=lambda x: abs(x - target), default=None)
    if best is None or abs(best - target) > tol:
        raise IntegrityError(
            f"no root of the new determinant factor matches alpha(m={r}/2) = {target!r}; "
            f"candidates {roots!r}")
    mp = minimal_polynomial_of_root(fac, best)
    return HalfIntegerAlpha(g, r, Fraction(r, 2), float(best), mp, fac, tuple(roots), det)
