"""Exact arithmetic over Q and Q(i), cross-checked with sympy."""
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from monopole_spectra.exact import (
    GaussianRational,
    GaussRationalPoly,
    RationalPolynomial,
    rational_interpolate,
)

fr = st.fractions(min_value=-20, max_value=20, max_denominator=9)
polys = st.lists(st.integers(-9, 9), min_size=1, max_size=7).map(RationalPolynomial)
nonzero_polys = polys.filter(lambda p: p.degree >= 0)

X = sympy.Symbol("x")


def to_sympy(p: RationalPolynomial):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in p.coeffs]))
                      or [0], X, domain="QQ")


@given(a=fr, b=fr, c=fr, d=fr)
def test_gaussian_field_axioms(a, b, c, d):
    z, w = GaussianRational(a, b), GaussianRational(c, d)
    assert z * w == w * z
    assert (z + w) - w == z
    if w:
        assert (z / w) * w == z
    assert complex(z * w) == pytest.approx(complex(z) * complex(w))


def test_gaussian_rejects_float_complex():
    with pytest.raises(TypeError):
        GaussianRational.coerce(1.5j)


@given(p=polys, q=nonzero_polys)
def test_divmod_matches_sympy(p, q):
    quo, rem = divmod(p, q)
    sq, sr = sympy.div(to_sympy(p), to_sympy(q))
    assert to_sympy(quo) == sq and to_sympy(rem) == sr
    assert quo * q + rem == p


@given(p=nonzero_polys, q=nonzero_polys)
def test_gcd_matches_sympy(p, q):
    g = p.gcd(q)
    ref = sympy.gcd(to_sympy(p), to_sympy(q)).monic()
    assert to_sympy(g) == ref


@given(p=nonzero_polys)
def test_squarefree_part_divides_and_is_squarefree(p):
    s = p.squarefree_part()
    assert s.divides(p)
    if s.degree > 0:
        assert s.gcd(s.derivative()).degree == 0


@given(roots=st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5),
                      min_size=1, max_size=5, unique=True))
def test_real_roots_in_finds_all_simple_roots(roots):
    p = RationalPolynomial([1])
    for r in roots:
        p = p * RationalPolynomial([-r, 1])
    found = p.real_roots_in(Fraction(-4), Fraction(4), grid=512)
    assert sorted(found) == pytest.approx(sorted(float(r) for r in roots), abs=1e-12)


def test_primitive_integer():
    p = RationalPolynomial([Fraction(1, 2), Fraction(-3, 4), Fraction(3, 2)])
    content, ints = p.primitive_integer()
    assert ints == [2, -3, 6] and content == Fraction(1, 4)


@given(ys=st.lists(fr, min_size=1, max_size=8))
def test_interpolation_reproduces_data(ys):
    xs = list(range(len(ys)))
    p = rational_interpolate(xs, ys)
    assert all(p(x) == y for x, y in zip(xs, ys))
    assert p.degree < len(ys)


def test_shift_out_root_multiplicity():
    p = RationalPolynomial([0, 0, 0, 2, 1])  # x^3 (x + 2)
    q, k = p.shift_out_root(0)
    assert k == 3 and q == RationalPolynomial([2, 1])


def test_gauss_poly_real_part():
    i = GaussianRational(0, 1)
    p = GaussRationalPoly([1, i, 3])
    assert p.real_part() == RationalPolynomial([1, 0, 3])
    assert p.imag_part() == RationalPolynomial([0, 1])
    assert not p.is_real()
