from fractions import Fraction

import pytest

from minshadow import theorems
from minshadow.solver import classify, shadow_coefficient


@pytest.mark.parametrize("t", [1, 2, 3, 5])
def test_reduction_identity_holds(t):
    for m in (1, 2, 3, 10, 50):
        ident = theorems.reduction_identity(t, m)
        assert ident.holds
        assert ident.delta != 0
        assert theorems.check_nonexistence(t, m)


def test_reduction_identity_vacuous_case_uses_solver():
    # t = 1, m = 1: the cofactor vanishes, so the identity alone says
    # nothing; the direct solve settles it.
    ident = theorems.reduction_identity(1, 1)
    assert ident.lhs == 0 and ident.rhs == 0
    assert theorems.check_nonexistence(1, 1)


def test_reduction_identity_rejects_bad_t():
    with pytest.raises(ValueError):
        theorems.reduction_identity(4, 3)


@pytest.mark.parametrize("t", [4, 6, 7, 9])
def test_shadow_route_matches_closed_form(t):
    for m in (2, 3, 5, 20):
        assert theorems.shadow_route(t, m) == theorems.b_closed_form(t, m)


def test_closed_forms_match_solved_shadow_coefficients():
    # closed forms give actual shadow coefficients (b_1 = 1 normalization
    # for t = 4 requires m >= 2)
    for t, jfirst in ((4, 0), (6, 0), (7, 0), (9, 1)):
        for m in (2, 3, 4):
            p, _, out = classify(24 * m + 2 * t)
            first, nxt = theorems.b_closed_form(t, m)
            assert shadow_coefficient(p, out.c, m + jfirst) == first
            assert shadow_coefficient(p, out.c, m + jfirst + 1) == nxt


KNOWN_THRESHOLDS = {4: 53, 6: 142, 7: 146, 9: 157}


@pytest.mark.parametrize("t", [4, 6, 7, 9])
def test_threshold_values_fast(t):
    res = theorems.threshold_scan(t, m_max=KNOWN_THRESHOLDS[t] + 5,
                                  with_solver=False)
    assert res.m_star == KNOWN_THRESHOLDS[t]
    assert res.negative_beyond


def test_threshold_solver_confirmation():
    res = theorems.threshold_scan(4, m_max=60, with_solver=True)
    assert res.m_star == 53 and res.solver_confirmed


def test_first_coefficient_always_positive():
    # the b_m (resp. b_{m+1}) coefficient stays positive; only the next
    # one changes sign
    for t in (4, 6, 7, 9):
        for m in range(1, 200):
            first, _ = theorems.b_closed_form(t, m)
            assert first > 0


def test_yorgov_condition():
    assert theorems.yorgov_condition(2)  # C(10, 2) = 45 odd
    assert not theorems.yorgov_condition(1)
    assert not theorems.yorgov_condition(10)  # m even but C(50, 10) is even
    assert theorems.yorgov_condition(0)


def test_doubly_even_bounds_recorded():
    assert theorems.DOUBLY_EVEN_M_BOUND == {0: 154, 1: 159, 2: 164}


def test_summary_covers_all_families():
    rows = theorems.summary(m_max=2)
    assert [row.t for row in rows] == list(range(12))
    by_t = {row.t: row for row in rows}
    for t in (1, 2, 3, 5):
        assert "reduction identity" in by_t[t].existence
    assert "53" in by_t[4].existence
    assert "142" in by_t[6].existence
    assert "146" in by_t[7].existence
    assert "157" in by_t[9].existence
    assert "164" in by_t[8].existence
    assert "open" in by_t[10].existence
