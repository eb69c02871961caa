"""Elliptic integrals, Jacobi and Weierstrass functions, division polynomials."""
from ..exact import GaussianRational, GaussRationalPoly, RationalPolynomial
from .divpoly import (
    TrivariatePoly,
    division_degree,
    division_poly,
    division_psi_numeric,
    reduced_division_sequence,
    special_division_from_psi,
    special_division_value,
)
from .elliptic import (
    JacobiValues,
    complete_K,
    incomplete_F,
    jacobi_sncndn,
    landen_ascend,
    landen_descend,
)
from .weierstrass import (
    CubicRoots,
    EllipticInvariants,
    HalfPeriods,
    cubic_roots,
    derivative_polynomials,
    half_periods,
    laurent_coefficients,
    ray_integral,
    reduce_argument,
    segment_integral,
    weierstrass_p,
    weierstrass_p_prime,
    wp_and_prime,
    wp_derivatives,
)

__all__ = [
    "CubicRoots", "EllipticInvariants", "GaussRationalPoly", "GaussianRational",
    "HalfPeriods", "JacobiValues", "RationalPolynomial", "TrivariatePoly",
    "complete_K", "cubic_roots", "derivative_polynomials", "division_degree",
    "division_poly", "division_psi_numeric", "half_periods", "incomplete_F",
    "jacobi_sncndn", "landen_ascend", "landen_descend", "laurent_coefficients",
    "ray_integral", "reduce_argument", "reduced_division_sequence", "segment_integral",
    "special_division_from_psi", "special_division_value", "weierstrass_p",
    "weierstrass_p_prime", "wp_and_prime", "wp_derivatives",
]
