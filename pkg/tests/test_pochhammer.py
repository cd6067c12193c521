import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derivgamma import (
    DomainError,
    MagnitudeOverflowError,
    falling_product,
    pochhammer,
    series_term,
    term_ratio,
)

small = st.floats(-20, 20, allow_nan=False)


@pytest.mark.parametrize("a, n, expected", [(1, 3, 6), (0, 5, 0), (0.5, 2, 0.75), (7.25, 0, 1)])
def test_pochhammer_examples(a, n, expected):
    assert pochhammer(a, n) == expected


@pytest.mark.parametrize("z, n, expected", [(3, 2, 2), (1, 1, 0), (2.5, 3, -0.375)])
def test_falling_product_examples(z, n, expected):
    assert falling_product(z, n) == expected


def test_series_term_examples():
    assert series_term(2, 1) == -1
    assert all(series_term(1, n) == 0 for n in range(1, 30))
    assert series_term(0.5, 2) == 0.1875


def test_term_ratio_examples():
    assert term_ratio(1, 1) == 0.25
    assert term_ratio(10, 1) == -2.0
    assert term_ratio(0.5, 100) == pytest.approx(float(Fraction(10050, 10201)), rel=1e-15)


def test_term_ratio_matches_consecutive_terms():
    z = 2.7 - 0.4j
    for n in range(1, 20):
        assert term_ratio(z, n) == pytest.approx(series_term(z, n + 1) / series_term(z, n), rel=1e-13)


@settings(max_examples=200, deadline=None)
@given(re=small, im=small, n=st.integers(1, 30))
def test_falling_product_is_signed_pochhammer(re, im, n):
    z = complex(re, im)
    if abs(z) > 20:
        z = z / abs(z) * 20
    p = pochhammer(1 - z, n)
    assert abs(falling_product(z, n) + (-1) ** (n + 1) * p) <= 1e-10 * (1 + abs(p))


@settings(max_examples=100, deadline=None)
@given(re=st.floats(-5, 10), im=st.floats(-3, 3), n=st.integers(1, 15))
def test_term_recurrence_vs_factorial_form(re, im, n):
    z = complex(re, im)
    direct = pochhammer(1 - z, n) / (n * math.factorial(n))
    assert abs(series_term(z, n) - direct) <= 1e-12 * abs(direct) + 1e-300


@settings(max_examples=100, deadline=None)
@given(re=st.floats(-4, 4), im=st.floats(-2, 2), n=st.integers(0, 12), m=st.integers(0, 12))
def test_pochhammer_split(re, im, n, m):
    a = complex(re, im)
    lhs = pochhammer(a, n + m)
    assert abs(lhs - pochhammer(a, n) * pochhammer(a + n, m)) <= 1e-12 * abs(lhs) + 1e-300


@settings(max_examples=200, deadline=None)
@given(z=st.floats(1e-3, 50), extra=st.integers(0, 500))
def test_terms_decay_once_n_reaches_ceil_z(z, extra):
    n = math.ceil(z) + extra
    assert abs(term_ratio(z, n)) < 1


def test_integer_arguments_are_exact():
    # (1-z)_n for integer z is an integer product, so no rounding below 2^53
    assert pochhammer(-9, 9) == -math.factorial(9)
    assert series_term(5, 4) == pytest.approx(float(Fraction(1, 4)), abs=0)


def test_overflow_is_reported():
    with pytest.raises(MagnitudeOverflowError):
        pochhammer(1e10, 40)
    with pytest.raises(MagnitudeOverflowError):
        falling_product(-1e10, 40)


def test_negative_index_rejected():
    with pytest.raises(DomainError):
        pochhammer(1, -1)
    with pytest.raises(DomainError):
        falling_product(1, 0)
    with pytest.raises(DomainError):
        series_term(1, 1.5)
