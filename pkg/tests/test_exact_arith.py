from fractions import Fraction

import pytest
from hypothesis import given

from eulerpascal.exact_arith import (
    binomial,
    floor_half,
    format_rational,
    parity_mask,
    parse_rational,
)

from conftest import small_fractions


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (7, 0, 1), (3, 5, 0), (3, -1, 0)])
def test_binomial_examples(n, k, expected):
    value = binomial(n, k)
    assert value == expected
    assert isinstance(value, Fraction)


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_pascal_rule_and_row_sums():
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
        assert sum(binomial(n, k) for k in range(n + 1)) == 2**n


@pytest.mark.parametrize("n,expected", [(0, 0), (5, 2), (8, 4)])
def test_floor_half(n, expected):
    assert floor_half(n) == expected


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 0), (6, 1), (7, 0)])
def test_parity_mask(n, expected):
    assert parity_mask(n) == expected


@given(small_fractions(), small_fractions(), small_fractions())
def test_field_laws_exact_and_canonical(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    zero = a + (-a)
    assert (zero.numerator, zero.denominator) == (0, 1)
    for v in (a + b, a * c):
        assert v.denominator > 0


@pytest.mark.parametrize(
    "text,value",
    [("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), ("4/2", Fraction(2)),
     (" -3/7 ", Fraction(-3, 7)), ("+5", Fraction(5))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1e3", "1/0", "a/b", "", "1/-2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(0) == "0"


@given(small_fractions(1000, 1000))
def test_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x
