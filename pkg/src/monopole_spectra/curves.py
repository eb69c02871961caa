"""Curves of bidegree (k, k) on P^1 x P^1.

A curve is stored as its (k+1) x (k+1) coefficient matrix, ``coeff[i][j]``
multiplying w^i z^j.  Entries are either exact :class:`GaussianRational`
values or Python complex numbers.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Any, Mapping

import numpy as np

from .errors import ConfigurationError, DomainError
from .exact import GaussianRational


def _is_exact(c) -> bool:
    return isinstance(c, GaussianRational)


@dataclass(frozen=True)
class BidegreeCurve:
    k: int
    coeff: tuple

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("bidegree must be positive")
        rows = tuple(tuple(r) for r in self.coeff)
        if len(rows) != self.k + 1 or any(len(r) != self.k + 1 for r in rows):
            raise ConfigurationError(f"coefficient matrix must be {self.k + 1}x{self.k + 1}")
        kinds = {_is_exact(c) for r in rows for c in r}
        if kinds == {True, False}:
            rows = tuple(tuple(complex(c) for c in r) for r in rows)
        elif kinds == {False}:
            rows = tuple(tuple(complex(c) for c in r) for r in rows)
        object.__setattr__(self, "coeff", rows)

    # --- construction ------------------------------------------------------------
    @classmethod
    def from_terms(cls, k: int, terms: Mapping[tuple[int, int], Any], exact: bool = False):
        zero = GaussianRational(0) if exact else 0j
        m = [[zero] * (k + 1) for _ in range(k + 1)]
        for (i, j), c in terms.items():
            m[i][j] = m[i][j] + c
        return cls(k, m)

    @classmethod
    def from_matrix(cls, mat) -> "BidegreeCurve":
        mat = list(mat)
        return cls(len(mat) - 1, mat)

    # --- views -------------------------------------------------------------------
    @property
    def exact(self) -> bool:
        return _is_exact(self.coeff[0][0])

    def matrix(self) -> np.ndarray:
        return np.array([[complex(c) for c in r] for r in self.coeff], dtype=np.complex128)

    def __call__(self, w, z):
        """Evaluate psi(w, z) numerically."""
        m = self.matrix()
        wp = np.array([w ** i for i in range(self.k + 1)])
        zp = np.array([z ** j for j in range(self.k + 1)])
        return complex(wp @ m @ zp)

    def z_polynomial(self, w) -> np.ndarray:
        """Coefficients (low degree first) of psi(w, .) as a polynomial in z."""
        m = self.matrix()
        wp = np.array([w ** i for i in range(self.k + 1)])
        return wp @ m

    def diagonal_polynomial(self) -> np.ndarray:
        """Coefficients (low degree first) of psi(z, z)."""
        m = self.matrix()
        out = np.zeros(2 * self.k + 1, dtype=np.complex128)
        for i in range(self.k + 1):
            for j in range(self.k + 1):
                out[i + j] += m[i, j]
        return out

    # --- normalisation -------------------------------------------------------------
    def scaled(self, factor) -> "BidegreeCurve":
        return BidegreeCurve(self.k, [[c * factor for c in r] for r in self.coeff])

    def normalized_by(self, i: int, j: int, target=1) -> "BidegreeCurve":
        """Rescale so that coeff[i][j] equals ``target``."""
        c = self.coeff[i][j]
        if abs(complex(c)) == 0:
            raise DomainError(f"coefficient ({i},{j}) vanishes; cannot normalise by it")
        if self.exact:
            t = GaussianRational.coerce(target)
            return BidegreeCurve(self.k, [[x * t / c for x in r] for r in self.coeff])
        return BidegreeCurve(self.k, [[x * complex(target) / c for x in r] for r in self.coeff])

    def largest_index(self, rtol: float = 1e-12) -> tuple[int, int]:
        """Row-major first entry whose modulus is maximal within ``rtol``."""
        m = np.abs(self.matrix())
        big = m.max()
        for i in range(self.k + 1):
            for j in range(self.k + 1):
                if m[i, j] >= big * (1.0 - rtol):
                    return i, j
        raise AssertionError("unreachable")

    def normalized(self) -> "BidegreeCurve":
        """Largest-modulus entry (first in row-major order) made 1."""
        return self.normalized_by(*self.largest_index())

    # --- structural checks ----------------------------------------------------------
    def reality_phase(self) -> complex:
        """Phase lam with coeff[a][b] = lam (-1)^(a+b) conj(coeff[k-b][k-a])."""
        m = self.matrix()
        a, b = self.largest_index()
        k = self.k
        partner = (-1) ** (a + b) * np.conj(m[k - b, k - a])
        if partner == 0:
            return complex("nan")
        return complex(m[a, b] / partner)

    def reality_defect(self) -> float:
        """Relative violation of the real structure (w, z) -> (-1/conj z, -1/conj w)."""
        m = self.matrix()
        lam = self.reality_phase()
        if not cmath.isfinite(lam):
            return float("inf")
        k = self.k
        scale = np.abs(m).max()
        worst = abs(abs(lam) - 1.0)
        for a in range(k + 1):
            for b in range(k + 1):
                d = m[a, b] - lam * (-1) ** (a + b) * np.conj(m[k - b, k - a])
                worst = max(worst, abs(d) / scale)
        return float(worst)

    def is_real(self, tol: float = 1e-12) -> bool:
        return self.reality_defect() <= tol

    def symmetry_defect(self) -> float:
        m = self.matrix()
        return float(np.abs(m - m.T).max() / np.abs(m).max())

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        return self.symmetry_defect() <= tol

    def max_deviation(self, other: "BidegreeCurve") -> float:
        if other.k != self.k:
            raise ConfigurationError("curves of different bidegree")
        return float(np.abs(self.matrix() - other.matrix()).max())

    def projective_deviation(self, other: "BidegreeCurve") -> float:
        """Entrywise distance after normalising both curves at self's largest entry."""
        i, j = self.largest_index()
        return self.normalized_by(i, j).max_deviation(other.normalized_by(i, j))

    def as_terms(self) -> dict:
        return {(i, j): c for i, r in enumerate(self.coeff) for j, c in enumerate(r)
                if abs(complex(c)) != 0}
