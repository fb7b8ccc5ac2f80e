from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from minshadow.series import Series


def poly(trunc, coeffs):
    return Series(trunc, dict(coeffs))


small_series = st.builds(
    poly,
    st.just(24),
    st.dictionaries(st.integers(min_value=0, max_value=23),
                    st.integers(min_value=-9, max_value=9), max_size=6))


def test_binomial_power_expansion():
    s = Series.from_binomial_power(1, 4, 2, 12)
    assert [s.coeff(d) for d in range(0, 10, 2)] == [1, 4, 6, 4, 1]
    s = Series.from_binomial_power(-1, 3, 2, 12)
    assert [s.coeff(d) for d in range(0, 8, 2)] == [1, -3, 3, -1]


def test_inv_even_power_is_inverse():
    for a in (1, 2, 5):
        inv = Series.inv_even_power(a, 30)
        direct = Series.from_binomial_power(-1, a, 2, 30)
        assert inv * direct == Series.one(30)


def test_mul_truncates():
    f = poly(4, {3: 1})
    assert (f * f).coeffs == {}


def test_coeff_beyond_truncation_raises():
    with pytest.raises(ValueError):
        Series.one(5).coeff(5)


def test_truncation_mismatch_raises():
    with pytest.raises(ValueError):
        Series.one(5) * Series.one(6)


def test_scale_shift():
    f = poly(10, {0: 1, 2: 3})
    g = f.scale_shift(Fraction(1, 2), 4)
    assert g.coeffs == {4: Fraction(1, 2), 6: Fraction(3, 2)}


def test_power_matches_repeated_mul():
    f = poly(16, {0: 1, 2: -2, 4: 1})
    assert f.power(3) == f * f * f
    assert f.power(0) == Series.one(16)


@given(small_series, small_series, small_series)
def test_mul_distributes_over_add(f, g, h):
    assert (f + g) * h == f * h + g * h


@given(small_series, small_series)
def test_mul_commutes(f, g):
    assert f * g == g * f


@given(small_series)
def test_add_sub_roundtrip(f):
    g = poly(24, {1: 7, 5: -2})
    assert f + g - g == f
