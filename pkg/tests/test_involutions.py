import pytest
from hypothesis import given, strategies as st

from inouebloch.errors import DomainError
from inouebloch.involutions import (
    MinimalityRule, admissible_isolated_counts, fixed_point_count, inoue_bloch_verdict, profile_from_R,
)


@pytest.mark.parametrize("args, k", [((7, 1, 1, 0), 11), ((7, 1, 1, 1), 9)])
def test_fixed_point_count(args, k):
    assert fixed_point_count(*args) == k


def test_fixed_point_count_infeasible():
    with pytest.raises(DomainError):
        fixed_point_count(7, 1, 1, 6)


@given(st.integers(0, 5))
def test_fixed_point_count_linear_in_h0(h):
    assert fixed_point_count(7, 1, 1, h) == 11 - 2 * h


def test_profiles():
    p = profile_from_R(7, 1, R_sq=1, KR=1, rho_S=3)
    assert (p.t, p.k, p.rho_That) == (1, 5, 7)
    assert p.identities_hold()
    p = profile_from_R(7, 1, R_sq=-1, KR=3, rho_S=3)
    assert (p.t, p.k, p.rho_That) == (3, 7, 10)
    assert p.identities_hold()
    with pytest.raises(DomainError, match="odd"):
        profile_from_R(7, 1, R_sq=2, KR=0, rho_S=3)


def test_profile_inverts_fixed_point_formula():
    p = profile_from_R(7, 1, R_sq=1, KR=7, rho_S=3)
    assert p.k == 11 and p.h0_anti == 0
    assert profile_from_R(7, 1, R_sq=1, KR=2, rho_S=3).h0_anti is None


@given(st.integers(-5, 5), st.integers(0, 20).map(lambda m: 2 * m + 1))
def test_odd_KR_gives_odd_k(R_sq, KR):
    rho_S = 3 if R_sq % 2 else 4
    p = profile_from_R(7, 1, R_sq, KR, rho_S)
    assert p.k % 2 == 1


def brute_force_admissible(K2_S):
    """Direct reading of the K^2 = 7 argument, t in {1, 3} only."""
    assert K2_S == 7
    out = set()
    for k in range(0, 60):
        if k < 5 or k % 2 == 0:
            continue
        if 8 - k > 0:      # t = 1: rho(T^) = k + 2, T^ minimal
            out.add(k)
        if 7 - k >= -1:    # t = 3: rho(T^) = k + 3
            out.add(k)
    return out


def test_scan_K2_7():
    scan = admissible_isolated_counts(7)
    assert scan.admissible == {5, 7} == brute_force_admissible(7)
    assert scan.complete
    by_t = {b.t: b for b in scan.branches}
    assert set(by_t) == {-1, 1, 3}
    for c in by_t[1].cases:
        assert c.rho_That == c.k + 2
        assert c.K2_That == 8 - c.k
        assert c.admissible == (c.K2_That > 0)
        assert c.k == 5 + 2 * c.m
    for c in by_t[3].cases:
        assert c.rho_That == c.k + 3
        assert c.K2_That == 7 - c.k
        assert c.admissible == (c.K2_That >= -1)
    assert by_t[1].rule is MinimalityRule.FORCED_MINIMAL
    assert by_t[3].rule is MinimalityRule.DROP_AT_MOST_2


def test_t_minus_one_excluded_once():
    scan = admissible_isolated_counts(7)
    excluded = scan.excluded()
    assert [b.t for b in excluded] == [-1]
    assert "R^2 = 2 - t = 3" in excluded[0].reason
    assert "numerically" in excluded[0].reason
    assert excluded[0].cases == []


def test_scan_is_deterministic():
    assert admissible_isolated_counts(7) == admissible_isolated_counts(7)


@pytest.mark.parametrize("K2", range(1, 10))
def test_scan_terminates(K2):
    scan = admissible_isolated_counts(K2)
    for b in scan.branches:
        ks = [c.K2_That for c in b.cases]
        assert ks == sorted(ks, reverse=True) and len(set(ks)) == len(ks)
        if b.cases:
            assert not b.cases[-1].admissible


@pytest.mark.parametrize("K2", [0, 10])
def test_scan_rejects_out_of_range(K2):
    with pytest.raises(DomainError):
        admissible_isolated_counts(K2)


def test_verdict_inoue():
    v = inoue_bloch_verdict((0, 1, 1))
    assert v.established and v.status == "established"
    assert v.k_values == (11, 9, 9)
    assert v.admissible == {5, 7}
    names = [s.name for s in v.steps]
    assert names[0] == "subgroup-sum ideal"
    assert "kappa(S/g1) <= 1" in names and names[-1] == "T(S) = 0"


def test_verdict_hypothetical_zero_dims():
    v = inoue_bloch_verdict((0, 0, 0))
    assert v.established and v.k_values == (11, 11, 11)


def test_verdict_failure_path():
    v = inoue_bloch_verdict((0, 3, 3))
    assert not v.established
    assert v.k_values == (11, 5, 5)
    assert v.failing_step.name == "kappa(S/g2) <= 1"


def test_verdict_negative_k():
    v = inoue_bloch_verdict((0, 1, 9))
    assert not v.established
    assert v.failing_step.name == "fixed points of g3"


def test_verdict_without_low_kappa_fact():
    v = inoue_bloch_verdict((0, 1, 1), low_kappa_quotients_ok=False)
    assert not v.established
    assert v.failing_step.name == "quotients satisfy Bloch"
