"""Charge-2 curves, parameter chain, reciprocity and limits."""
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from monopole_spectra import charge2
from monopole_spectra.errors import DomainError
from monopole_spectra.special_functions import complete_K, incomplete_F, jacobi_sncndn

masses = st.floats(min_value=0.05, max_value=5.0)
kappas = st.floats(min_value=0.02, max_value=0.98)

# alpha = 1/(kappa sn^2(rho/2)) and lambda from mpmath.ellipfun at 30 digits
PARAM_ORACLE = [
    (1.0, 0.5, 12.113600584130240496, 0.43542054468233904782, 4.7320508075688772935),
    (0.5, 0.3, 12.874051115404295168, 0.2276287338385978247, 4.165489758438650798),
    (2.0, 0.8, 11.993407286728009703, 0.76783821129899826116, 5.0032952627836870527),
]


def test_m1_example_coefficients():
    c = charge2.curve_from_mass(1.0, 0.6)
    assert c.coeff[2][2].real == pytest.approx(1 / 3, rel=1e-13)
    assert c.coeff[1][1].real == pytest.approx(1.6 / math.sqrt(1.8), rel=1e-13)
    assert c.coeff[2][0].real == -1.0


@given(kappa=st.floats(0.0, 0.99))
def test_m1_closed_form(kappa):
    a = charge2.curve_m1_closed(kappa).normalized_by(2, 0)
    b = charge2.curve_from_mass(1.0, kappa).normalized_by(2, 0)
    assert a.max_deviation(b) < 1e-12


@pytest.mark.parametrize("m,kappa,alpha,lam,Lsq", PARAM_ORACLE)
def test_derived_params_oracle(m, kappa, alpha, lam, Lsq):
    d = charge2.derived_params(m, kappa)
    assert d.alpha == pytest.approx(alpha, rel=1e-12)
    assert d.lam == pytest.approx(lam, rel=1e-12)
    assert d.LambdaSq == pytest.approx(Lsq, rel=1e-12)


def test_alpha_at_zero_mass_is_bisection_value():
    kp = math.sqrt(0.75)
    assert charge2.derived_params(0.0, 0.5).alpha == pytest.approx((1 + kp) / 0.5, rel=1e-13)


def test_alpha_undefined_at_axial_point():
    with pytest.raises(DomainError):
        charge2.derived_params(1.0, 0.0)


@given(m=masses, kappa=kappas)
def test_parameter_invariants(m, kappa):
    d = charge2.derived_params(m, kappa)
    assert d.u > d.v > 2
    assert 0 < d.lam < 1
    assert max(d.invariant_defects().values()) < 1e-9


@given(m=masses, kappa=kappas)
def test_cs_ds_identity(m, kappa):
    d = charge2.derived_params(m, kappa)
    j = jacobi_sncndn(d.rho, kappa)
    lhs = d.u ** 2 - 2 * d.u * d.v + 4
    rhs = 2 * (d.u - d.v) * (2 / kappa) * (j.cn / j.sn) * (j.dn / j.sn)
    assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-9)


@given(m=masses, kappa=kappas)
def test_curve_is_real_and_symmetric(m, kappa):
    c = charge2.curve_from_mass(m, kappa)
    assert c.is_symmetric() and c.is_real(1e-12)


@given(m=masses, kappa=kappas)
def test_diagonal_roots_pair_up(m, kappa):
    d = charge2.derived_params(m, kappa)
    roots = charge2.diagonal_roots(m, kappa)
    assert len(charge2.pair_reciprocal_roots(roots, tol=1e-6)) == 2
    expected = sorted([math.sqrt(d.lam), math.sqrt(d.lam), 1 / math.sqrt(d.lam), 1 / math.sqrt(d.lam)])
    assert sorted(np.abs(roots)) == pytest.approx(expected, rel=1e-6)


@given(m=st.floats(0.0, 4.0), kappa=st.floats(0.05, 0.95))
def test_mass_relation(m, kappa):
    v = charge2.verify_triviality(m, kappa)
    assert abs(v.mass_residual) < 1e-10


@given(m=st.floats(0.1, 4.0), kappa=st.floats(0.05, 0.95))
def test_reciprocity_integrals(m, kappa):
    v = charge2.verify_triviality(m, kappa)
    assert v.I1 == pytest.approx(v.I1_closed, rel=1e-10)
    assert v.I2 == pytest.approx(v.I2_closed, rel=1e-8, abs=1e-12)
    assert (v.ell1, v.ell2) == (0, -1)
    assert v.ell_residual < 1e-8


def test_incomplete_F_example():
    d = charge2.derived_params(1.0, 0.5)
    phi = math.asin(1 / math.sqrt(d.alpha * 0.5))
    assert incomplete_F(phi, 0.5) == pytest.approx(complete_K(0.5) / 4, rel=1e-12)


# --- limits ---------------------------------------------------------------------------

@given(m=st.floats(0.0, 10.0))
def test_axial_limit_factors(m):
    c = charge2.limit_axial(m)
    sp, sm = charge2.axial_factors(m)
    prod = np.zeros((3, 3), dtype=complex)
    prod[2, 0], prod[1, 1], prod[0, 2] = 1, -(sp + sm), sp * sm
    assert np.abs(c.matrix() - prod).max() < 1e-12


def test_axial_limit_is_kappa_zero_of_mass_curve():
    c = charge2.curve_from_mass(1.0, 0.0).normalized_by(2, 0)
    assert c.coeff[1][1].real == pytest.approx(-math.sqrt(2), rel=1e-14)
    assert charge2.limit_axial(1.0).projective_deviation(charge2.curve_from_mass(1.0, 1e-7)) < 1e-6


def test_nullaron_limit_exact():
    c = charge2.limit_nullaron(Fraction(1, 2))
    assert c.exact
    assert c.coeff[2][2] == Fraction(1, 2) and c.coeff[2][0] == -1
    assert charge2.curve_from_mass(0.0, 0.5).max_deviation(charge2.limit_nullaron(0.5)) == 0


@pytest.mark.parametrize("m", [0.5, 1.0, 2.0])
def test_separation_limit(m):
    # approach is algebraic in 1 - kappa with an m-dependent rate, slower for larger m
    sep = charge2.limit_separation()
    devs = [charge2.curve_from_mass(m, 1 - e).max_deviation(sep) for e in (1e-2, 1e-4, 1e-6, 1e-8, 1e-10)]
    assert all(b < a for a, b in zip(devs, devs[1:]))
    assert devs[-1] < 1e-2


@given(kappa=st.floats(0.01, 0.95))
def test_euclidean_forms_agree(kappa):
    e = charge2.euclid_limit_charge2(kappa)
    assert e.max_deviation < 1e-12 * max(1.0, max(abs(c) for c in e.coeffs))
    assert len(e.branch_points) == 4


def test_nullaron_from_degree_two_map():
    # R(z) = k' / (z^2 - k) reproduces the nullaron limit up to scale
    k = Fraction(4, 5)
    c = charge2.nullaron_from_rational_map([Fraction(3, 5)], [-k, 0, 1])
    assert c.exact
    assert c.projective_deviation(charge2.limit_nullaron(k)) == 0
    assert c.reality_defect() < 1e-15


def test_nullaron_map_degeneracy_rejected():
    with pytest.raises(DomainError):
        charge2.nullaron_from_rational_map([1, 1], [1, 1])


@pytest.mark.parametrize("bad", [(-1.0, 0.5), (1.0, 1.0), (1.0, -0.2), (float("inf"), 0.5)])
def test_domain_errors(bad):
    with pytest.raises(DomainError):
        charge2.curve_from_mass(*bad)
