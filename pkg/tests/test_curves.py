"""Bidegree curves: construction, normalisation, real structure."""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from monopole_spectra.charge2 import star_line
from monopole_spectra.curves import BidegreeCurve
from monopole_spectra.errors import ConfigurationError, DomainError
from monopole_spectra.exact import GaussianRational

coords = st.floats(min_value=-5, max_value=5, allow_nan=False)
heights = st.floats(min_value=0.05, max_value=5)


def test_shape_validation():
    with pytest.raises(ConfigurationError):
        BidegreeCurve(2, [[1, 0], [0, 1]])
    with pytest.raises(DomainError):
        BidegreeCurve(0, [[1]])


def test_mixed_entries_become_complex():
    c = BidegreeCurve(1, [[GaussianRational(1), 2.0], [0.5, GaussianRational(0, 1)]])
    assert not c.exact
    assert c.coeff[1][1] == 1j


def test_evaluation_and_polynomials():
    c = BidegreeCurve.from_terms(2, {(2, 0): 1.0, (1, 1): -3.0, (0, 2): 1.0})
    assert c(2.0, 1.0) == pytest.approx(4 - 6 + 1)
    assert np.allclose(c.z_polynomial(2.0), [4, -6, 1])
    assert np.allclose(c.diagonal_polynomial(), [0, 0, -1, 0, 0])


def test_normalisation_by_zero_entry_fails():
    c = BidegreeCurve.from_terms(1, {(0, 0): 1.0})
    with pytest.raises(DomainError):
        c.normalized_by(1, 1)


def test_exact_normalisation_stays_exact():
    c = BidegreeCurve.from_terms(1, {(0, 0): Fraction(3), (1, 1): Fraction(6)}, exact=True)
    n = c.normalized()
    assert n.exact and n.coeff[1][1] == 1 and n.coeff[0][0] == Fraction(1, 2)


@given(x1=coords, x2=coords, x3=heights)
def test_star_line_is_real(x1, x2, x3):
    assert star_line(x1, x2, x3).is_real(1e-12)


@given(x1=coords, x2=coords, x3=heights, t=st.floats(-3, 3), s=st.floats(0.1, 3))
def test_star_line_passes_through_point(x1, x2, x3, t, s):
    # a geodesic through the point: w parametrises its endpoint, z that of the reversed line
    c = star_line(x1, x2, x3)
    w = complex(t, s)
    zs = np.roots(c.z_polynomial(w)[::-1])
    for z in zs:
        assert abs(c(w, z)) < 1e-9 * max(1.0, abs(w), abs(z)) ** 2 * max(1.0, x1 * x1 + x2 * x2 + x3 * x3)


def test_star_line_exact_for_rational_point():
    c = star_line(Fraction(1, 2), 0, 1)
    assert c.exact
    assert c.coeff[1][0] == Fraction(-5, 4)


def test_star_line_rejects_lower_half_space():
    with pytest.raises(DomainError):
        star_line(0.0, 0.0, 0.0)


@given(st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
                min_size=9, max_size=9))
def test_projective_deviation_ignores_scale(vals):
    m = np.array(vals).reshape(3, 3)
    if np.abs(m).max() < 1e-3:
        return
    c = BidegreeCurve.from_matrix(m.tolist())
    assert c.projective_deviation(c.scaled(2.5 - 1j)) < 1e-12


def test_reality_defect_detects_broken_structure():
    c = star_line(0.3, -0.2, 1.1)
    broken = BidegreeCurve.from_matrix((c.matrix() + np.array([[0, 0.1j], [0, 0]])).tolist())
    assert broken.reality_defect() > 1e-3
