"""Self-check suites run by ``monopole-spectra verify``.

Each suite returns a list of :class:`Check` records; nothing here raises on a
failed identity, so a report always lists every check.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import charge2, cohomology, division, platonic
from .errors import MonopoleError
from .exact import RationalPolynomial
from .platonic import Group
from .special_functions import (
    EllipticInvariants,
    complete_K,
    jacobi_sncndn,
    landen_ascend,
    special_division_from_psi,
    special_division_value,
    wp_and_prime,
)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    value: float
    tolerance: float
    detail: str = ""


def _check(suite, name, value, tol, detail="") -> Check:
    value = float(value)
    return Check(suite, name, bool(value <= tol), value, tol, detail)


def _guard(suite: str, name: str, fn: Callable[[], list[Check]]) -> list[Check]:
    try:
        return fn()
    except MonopoleError as exc:
        return [Check(suite, name, False, float("inf"), 0.0, f"{type(exc).__name__}: {exc}")]


# --- closed forms shared by several suites ----------------------------------------------

TABLE_CLOSED = {
    Group.TETRA: {0: math.sqrt(3.0), 1: 1 / math.sqrt(3.0), 2: 2 - math.sqrt(3.0),
                  3: math.sqrt(23 - 4 * math.sqrt(33.0))},
    Group.OCTA: {0: 1.0, 1: 1 / 3, 2: 1 / 7, 3: 7 - 4 * math.sqrt(3.0)},
}


def determinant_targets() -> dict[tuple[Group, int], RationalPolynomial]:
    a = RationalPolynomial.x()
    one = RationalPolynomial.constant(1)
    t0 = (a ** 2 * -1 + 3) ** 2
    m13 = (a ** 2 * -3 + 1) ** 2
    return {
        (Group.TETRA, 0): t0,
        (Group.TETRA, 1): m13 * t0 * 4,
        (Group.TETRA, 2): (a ** 2 + 5) ** 2 * m13 * (a ** 2 - a * 4 + 1) ** 2
                          * (a ** 2 + a * 4 + 1) ** 2 * 4,
        (Group.OCTA, 0): (a + one) ** 2 * (one - a) ** 3 * 96,
        (Group.OCTA, 1): (a * 5 + 1) ** 2 * (a + 5) ** 3 * (a * 3 - 1) ** 3 * (a - one) ** 4 * 16,
    }


M13_FACTOR = (-11, 0, -715, 0, 866, 0, 506, 0, -39, 0, 1)


@functools.lru_cache(maxsize=None)
def _half_integer(g: Group, r: int) -> float:
    return cohomology.half_integer_alpha(g, r).alpha


# --- suites ------------------------------------------------------------------------------

def suite_special() -> list[Check]:
    out = []

    def jacobi():
        worst = 0.0
        for k in (0.1, 0.5, 0.9, 0.99):
            for u in (0.3, 1.1, 2.7, -0.8):
                j = jacobi_sncndn(u, k)
                worst = max(worst, abs(j.sn ** 2 + j.cn ** 2 - 1), abs(j.dn ** 2 + k * k * j.sn ** 2 - 1))
        return [_check("special", "jacobi_identities", worst, 1e-13)]

    def landen():
        worst = max(abs(complete_K(landen_ascend(k)) - (1 + k) * complete_K(k)) / ((1 + k) * complete_K(k))
                    for k in np.linspace(0.1, 0.9, 9))
        return [_check("special", "landen_K", worst, 1e-12)]

    invs = (EllipticInvariants(4.0, 1.0), EllipticInvariants(-3.0, 2.5), EllipticInvariants(0.0, 27 / 4))
    pts = (0.31 + 0.17j, 0.5 - 0.4j, 0.9 + 0.05j, 0.23 + 0.61j)

    def wp_ode():
        worst = 0.0
        for inv in invs:
            for u in pts:
                p, dp = wp_and_prime(u, inv)
                rhs = 4 * p ** 3 - inv.g2 * p - inv.g3
                worst = max(worst, abs(dp ** 2 - rhs) / max(1.0, abs(dp) ** 2))
        return [_check("special", "wp_differential_equation", worst, 1e-9)]

    def wp_dup():
        worst = 0.0
        for inv in invs:
            for u in pts:
                p, dp = wp_and_prime(u, inv)
                ddp = 6 * p * p - inv.g2 / 2
                dup = -2 * p + 0.25 * (ddp / dp) ** 2
                p2 = wp_and_prime(2 * u, inv)[0]
                worst = max(worst, abs(p2 - dup) / max(1.0, abs(p2)))
        return [_check("special", "wp_duplication", worst, 1e-9)]

    def div_oracle():
        worst = 0.0
        for inv in invs[:2]:
            for u in pts[:3]:
                p = wp_and_prime(u, inv)[0]
                for n in range(3, 8):
                    rec = special_division_value(n, p, inv.g2, inv.g3)
                    det = special_division_from_psi(n, u, inv)
                    worst = max(worst, abs(rec - det) / max(abs(rec), abs(det), 1e-300))
        return [_check("special", "division_recurrence_vs_determinant", worst, 1e-8)]

    for name, fn in (("jacobi", jacobi), ("landen", landen), ("wp_ode", wp_ode),
                     ("wp_dup", wp_dup), ("division", div_oracle)):
        out += _guard("special", name, fn)
    return out


def suite_charge2() -> list[Check]:
    def mass_grid():
        worst = 0.0
        for m in np.linspace(0.1, 3.0, 10):
            for k in np.linspace(0.05, 0.95, 10):
                worst = max(worst, abs(charge2.verify_triviality(m, k).mass_residual))
        return [_check("charge2", "mass_relation_grid", worst, 1e-10)]

    def closed_m1():
        worst = max(charge2.curve_m1_closed(k).normalized_by(2, 0)
                    .max_deviation(charge2.curve_from_mass(1.0, k).normalized_by(2, 0))
                    for k in (0.1, 0.3, 0.6, 0.9))
        return [_check("charge2", "m1_closed_form", worst, 1e-12)]

    def reciprocity():
        checks = []
        for m, k in ((0.5, 0.3), (1.0, 0.6), (2.0, 0.8)):
            v = charge2.verify_triviality(m, k)
            checks.append(_check("charge2", f"cycle_integers(m={m},kappa={k})",
                                 0.0 if (v.ell1, v.ell2) == (0, -1) else 1.0, 0.0,
                                 f"({v.ell1}, {v.ell2}) residual {v.ell_residual:.3g}"))
            checks.append(_check("charge2", f"I1_closed(m={m},kappa={k})",
                                 abs(v.I1 - v.I1_closed) / v.I1_closed, 1e-10))
        return checks

    def euclid():
        worst = max(charge2.euclid_limit_charge2(k).max_deviation for k in np.linspace(0.1, 0.9, 9))
        return [_check("charge2", "euclidean_forms_agree", worst, 1e-12)]

    out = []
    for name, fn in (("mass", mass_grid), ("m1", closed_m1), ("reciprocity", reciprocity),
                     ("euclid", euclid)):
        out += _guard("charge2", name, fn)
    return out


def suite_platonic() -> list[Check]:
    def table():
        checks = []
        for g, forms in TABLE_CLOSED.items():
            for r, exact in forms.items():
                a = platonic.alpha_from_mass(g, r / 2)
                checks.append(_check("platonic", f"table({g.value},m={r}/2)", abs(a - exact), 1e-9))
        return checks

    def cycles():
        checks = []
        expect = {Group.TETRA: (4, -8), Group.OCTA: (6, -12)}
        for g in Group:
            for r in (0, 1, 2, 3):
                c = platonic.verify_cycle_integers(g, TABLE_CLOSED[g][r], r / 2)
                ok = (c.ell1, c.ell2) == expect[g] and c.residual < 1e-6
                checks.append(Check("platonic", f"cycle_integers({g.value},m={r}/2)", ok,
                                    c.residual, 1e-6, f"({c.ell1}, {c.ell2})"))
        return checks

    def geometry():
        rng = np.random.default_rng(20240601)
        checks = []
        for g, alpha in ((Group.TETRA, 0.8), (Group.OCTA, 0.4)):
            fam = platonic.PlatonicFamily(g, alpha)
            worst = 0.0
            for w in rng.normal(size=50) + 1j * rng.normal(size=50):
                for z in platonic.curve_points(fam, complex(w)):
                    worst = max(worst, platonic.weierstrass_residual(fam, complex(w), complex(z)))
            checks.append(_check("platonic", f"weierstrass_residual({g.value})", worst, 1e-9))
        for g, a in ((Group.TETRA, Fraction(1, 2)), (Group.OCTA, Fraction(1, 3)), (Group.OCTA, Fraction(5, 7))):
            platonic.j_invariant(g, a)  # raises on mismatch
            checks.append(Check("platonic", f"j_exact({g.value},{a})", True, 0.0, 0.0))
        return checks

    def euclid():
        e = platonic.euclid_limit_tetra()
        rich = platonic.richardson_alpha_bar()
        return [_check("platonic", "euclid_varpi1", e.varpi1_defect, 1e-9),
                _check("platonic", "euclid_richardson", abs(rich - e.alpha_bar) / e.alpha_bar, 0.01)]

    out = []
    for name, fn in (("table", table), ("cycles", cycles), ("geometry", geometry), ("euclid", euclid)):
        out += _guard("platonic", name, fn)
    return out


def suite_cohomology() -> list[Check]:
    def dets():
        checks = []
        for (g, r), target in determinant_targets().items():
            d = cohomology.real_det(cohomology.multiplication_matrix(g, r))
            ok = d == target or d == -target
            checks.append(Check("cohomology", f"det({g.value},r={r})", ok, 0.0 if ok else 1.0, 0.0))
        return checks

    def half():
        return [_check("cohomology", f"half_integer({g.value},r={r})",
                       abs(_half_integer(g, r) - TABLE_CLOSED[g][r]), 1e-9)
                for g in Group for r in (1, 2, 3)]

    return _guard("cohomology", "determinants", dets) + _guard("cohomology", "half_integer", half)


def suite_division() -> list[Check]:
    def third():
        res = division.alpha_for_rational_mass(Group.TETRA, Fraction(1, 3), minimal=False)
        ok = res.polynomial.divisible_by(M13_FACTOR)
        return [Check("division", "m=1/3 divisor", ok, 0.0 if ok else 1.0, 0.0),
                _check("division", "m=1/3 root", abs(res.alpha - 0.791875), 1e-5)]

    def tri():
        checks = []
        for g in Group:
            for r in (1, 2, 3):
                a1 = _half_integer(g, r)
                a2 = platonic.alpha_from_mass(g, r / 2)
                a3 = division.alpha_for_rational_mass(g, Fraction(r, 2), minimal=False).alpha
                spread = max(a1, a2, a3) - min(a1, a2, a3)
                checks.append(_check("division", f"tri_oracle({g.value},m={r}/2)", spread, 1e-8))
        return checks

    return _guard("division", "rational", third) + _guard("division", "tri_oracle", tri)


SUITES: dict[str, Callable[[], list[Check]]] = {
    "special": suite_special,
    "charge2": suite_charge2,
    "platonic": suite_platonic,
    "cohomology": suite_cohomology,
    "division": suite_division,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[name]()
