"""Spectral curves of hyperbolic monopoles with platonic and charge-2 symmetry."""
from ._accel import JIT_ENABLED, backend_name
from .charge2 import (
    Charge2Derived,
    curve_from_mass,
    derived_params,
    euclid_limit_charge2,
    limit_axial,
    limit_nullaron,
    limit_separation,
    nullaron_from_rational_map,
    star_line,
    verify_triviality,
)
from .cohomology import CechMatrix, det_poly, half_integer_alpha, multiplication_matrix
from .curves import BidegreeCurve
from .division import (
    AlphaPolynomial,
    DivisionPoint,
    alpha_for_rational_mass,
    alpha_polynomial,
    division_point,
)
from .errors import (
    ConfigurationError,
    DomainError,
    IntegrityError,
    MonopoleError,
    NumericError,
    PoleError,
    ResourceError,
)
from .platonic import (
    Group,
    PlatonicFamily,
    alpha_from_mass,
    ansatz_curve,
    j_invariant,
    mass_from_alpha,
    quotient_curve,
    quotient_invariants,
    verify_cycle_integers,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaPolynomial", "BidegreeCurve", "CechMatrix", "Charge2Derived", "ConfigurationError",
    "DivisionPoint", "DomainError", "Group", "IntegrityError", "JIT_ENABLED", "MonopoleError",
    "NumericError", "PlatonicFamily", "PoleError", "ResourceError", "alpha_for_rational_mass",
    "alpha_from_mass", "alpha_polynomial", "ansatz_curve", "backend_name", "curve_from_mass",
    "derived_params", "det_poly", "division_point", "euclid_limit_charge2", "half_integer_alpha",
    "j_invariant", "limit_axial", "limit_nullaron", "limit_separation", "mass_from_alpha",
    "multiplication_matrix", "nullaron_from_rational_map", "quotient_curve", "quotient_invariants",
    "star_line", "verify_cycle_integers", "verify_triviality",
]
