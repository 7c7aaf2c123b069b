from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eulerpascal.poly import RatPoly

from conftest import small_fractions

polys = st.lists(small_fractions(), max_size=6).map(RatPoly)


def test_trimming_and_zero():
    assert RatPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert RatPoly([0, 0]).coeffs == ()
    assert RatPoly().degree == -1
    assert RatPoly([0, 0, 3]).degree == 2


def test_str_rendering():
    assert str(RatPoly([Fraction(1, 6), -1, 1])) == "x^2 - x + 1/6"
    assert str(RatPoly()) == "0"
    assert str(RatPoly([0, Fraction(-3, 2)])) == "-3/2*x"


def test_compose_affine():
    # (x^2 - x) at (x+1)/2, times 4, is x^2 - 1
    p = RatPoly([0, -1, 1])
    half = Fraction(1, 2)
    assert p.compose_affine(half, half) * 4 == RatPoly([-1, 0, 1])


def test_constant_equals_scalar():
    assert RatPoly.constant(3) == 3
    assert RatPoly.constant(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(RatPoly.constant(Fraction(1, 2))) == hash(Fraction(1, 2))


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p - p).is_zero()


@given(polys, polys, small_fractions())
def test_evaluation_is_a_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(polys, st.integers(0, 5))
def test_power_matches_repeated_product(p, n):
    expected = RatPoly.constant(1)
    for _ in range(n):
        expected = expected * p
    assert p**n == expected


def test_immutable():
    p = RatPoly([1])
    with pytest.raises(AttributeError):
        p.coeffs = ()
