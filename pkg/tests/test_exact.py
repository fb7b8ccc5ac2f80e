import math

import pytest
from hypothesis import given, strategies as st

from minshadow.exact import binom, binom_row, two_power
from fractions import Fraction


def test_binom_small_values():
    assert binom(5, 2) == 10
    assert binom(0, 0) == 1
    assert binom(7, 0) == 1
    assert binom(7, 7) == 1
    assert binom(7, 8) == 0
    assert binom(7, -1) == 0


def test_binom_rejects_negative_upper():
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_binom_matches_math_comb():
    for a in range(0, 40):
        for k in range(0, a + 1):
            assert binom(a, k) == math.comb(a, k)


@given(st.integers(min_value=0, max_value=300), st.integers(min_value=1, max_value=60))
def test_binom_row_matches_comb(a, length):
    row = binom_row(a, length)
    assert len(row) == length
    for k, v in enumerate(row):
        assert v == math.comb(a, k) if k <= a else v == 0


def test_two_power():
    assert two_power(0) == 1
    assert two_power(10) == 1024
    assert two_power(-3) == Fraction(1, 8)
    assert two_power(-3) * two_power(3) == 1
