import math
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from sgkit.bipartite import (
    BipartiteSolution,
    RegimeCase,
    RegimeSpec,
    asymptotic_estimate,
    classify_sg_eq_k,
    conjecture_sample,
    conjecture_scan,
    inv_binom_ceil,
    level_set,
    part_size_bound,
    quartic_roots,
    sg_balanced,
    sg_bipartite,
    sg_large_m,
)

from _data import TABLE_15x15, optimal_split_cases


def brute_split(n, m):
    """Reference optimum by full enumeration of (s1, s2)."""
    best = None
    for s1 in range(n + 1):
        for s2 in range(m + 1):
            if comb(s2, 2) >= n - s1 and comb(s1, 2) >= m - s2:
                cand = (s1 + s2, s1, s2)
                if best is None or cand < best:
                    best = cand
    return best


# ---------------------------------------------------------------- inverses


def test_inv_binom_ceil_known_values():
    assert inv_binom_ceil(0) == 0
    assert inv_binom_ceil(1) == 2
    assert inv_binom_ceil(4) == 4
    assert inv_binom_ceil(-3) == 0


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=80, deadline=None)
def test_inv_binom_ceil_is_tight(t):
    s = inv_binom_ceil(t)
    assert comb(s, 2) >= t
    assert s == 0 or comb(s - 1, 2) < t


# --------------------------------------------------------------- the scan


def test_scan_matches_reference_table():
    for mi, row in enumerate(TABLE_15x15, start=1):
        for ni, want in enumerate(row, start=1):
            assert sg_bipartite(ni, mi).k == want, (ni, mi)


def test_scan_matches_brute_enumeration():
    for n in range(1, 13):
        for m in range(1, 13):
            sol = sg_bipartite(n, m)
            assert (sol.k, sol.s1, sol.s2) == brute_split(n, m)


def test_known_selections():
    assert (sg_bipartite(5, 5).s1, sg_bipartite(5, 5).s2) == (0, 5)
    assert (sg_bipartite(6, 4).s1, sg_bipartite(6, 4).s2) == (0, 4)
    assert (sg_bipartite(3, 10).s1, sg_bipartite(3, 10).s2) == (0, 10)
    assert sg_bipartite(2, 2).k == 3
    assert sg_bipartite(1, 1).k == 2


@given(st.integers(min_value=1, max_value=300), st.integers(min_value=1, max_value=300))
@settings(max_examples=60, deadline=None)
def test_scan_symmetry_and_constraints(n, m):
    a, b = sg_bipartite(n, m), sg_bipartite(m, n)
    assert a.k == b.k
    assert comb(a.s2, 2) >= n - a.s1
    assert comb(a.s1, 2) >= m - a.s2


def test_solution_validation():
    with pytest.raises(ValueError):
        BipartiteSolution(2, 2, 2, 0, 2)  # infeasible split
    with pytest.raises(ValueError):
        BipartiteSolution(3, 3, 4, 1, 2)  # k != s1 + s2 would be 3
    with pytest.raises(ValueError):
        sg_bipartite(0, 5)
    with pytest.raises(ValueError):
        sg_bipartite(5, 10**18 + 1)


def test_huge_n_dense_regime_closed_form():
    n = 2 * 10**6
    m = comb(n, 2) + 999
    sol = sg_bipartite(n, m)
    assert sol.k == m + 1 - comb(n - 1, 2)
    assert (sol.s1, sol.s2) == (n, sol.k - n)


def test_huge_n_outside_dense_regime_refused():
    with pytest.raises(ValueError):
        sg_bipartite(2 * 10**6, 5)


# ------------------------------------------------------------ closed forms


def test_balanced_closed_form_values():
    assert sg_balanced(6) == 6
    assert sg_balanced(7) == 7   # 8*7-7 = 49 is a square
    assert sg_balanced(9) == 8
    assert sg_balanced(10) == 8
    with pytest.raises(ValueError):
        sg_balanced(5)


def test_balanced_equals_scan():
    for n in range(6, 140):
        assert sg_balanced(n) == sg_bipartite(n, n).k, n


def test_part_size_bound_identities():
    for k in range(2, 25):
        for i in range(-1, 4):
            assert part_size_bound(k, i) == k
        for i in range(3, k + 1):
            assert part_size_bound(k, i) == k - i + comb(i, 2)
    assert part_size_bound(12, 4) == 14
    assert part_size_bound(12, 11) == 56
    for k in range(3, 30):
        assert part_size_bound(k, k) == k - 1 + comb(k - 1, 2) <= comb(k, 2)


def test_classification_hardcoded_exceptions():
    assert classify_sg_eq_k(1, 1, 2) and not classify_sg_eq_k(1, 1, 1)
    assert classify_sg_eq_k(2, 2, 3) and not classify_sg_eq_k(2, 2, 2)


def test_classification_agrees_with_scan_small():
    for n in range(1, 21):
        for m in range(1, 21):
            true_k = sg_bipartite(n, m).k
            for k in range(1, 30):
                assert classify_sg_eq_k(n, m, k) == (k == true_k), (n, m, k)


@pytest.mark.parametrize("k", range(4, 13))
def test_case_table_optimal_splits(k):
    """Each known-optimal boundary witness must be feasible, total k, and
    sit exactly on its level."""
    seen = 0
    for case_id, n, m, s1, s2 in optimal_split_cases(k):
        seen += 1
        assert 0 <= s1 <= n and 0 <= s2 <= m, (case_id, k, n, m)
        assert s1 + s2 == k, (case_id, k, n, m)
        assert comb(s2, 2) >= n - s1, (case_id, k, n, m)
        assert comb(s1, 2) >= m - s2, (case_id, k, n, m)
        assert sg_bipartite(n, m).k == k, (case_id, k, n, m)
    assert seen > 0


def test_large_m_closed_form():
    assert sg_large_m(4, 7) == 5
    assert sg_large_m(3, 10) == 10
    assert sg_large_m(5, 11) == 6
    for bad in ((4, 6), (5, 10), (1, 1)):
        with pytest.raises(ValueError):
            sg_large_m(*bad)


def test_large_m_agrees_with_scan():
    for n in range(1, 25):
        start = comb(n, 2) + 1 if n >= 3 else n + 1
        for m in range(start, comb(n, 2) + 2 * n + 1):
            assert sg_large_m(n, m) == sg_bipartite(n, m).k, (n, m)


def test_level_set_two():
    assert sorted(level_set(2)) == [(1, 1), (1, 2), (2, 1)]
    with pytest.raises(ValueError):
        level_set(1)


def test_level_set_complete_within_larger_box():
    # recompute level sets from a box twice the claimed search bound; no
    # solution may exist outside the one level_set() uses
    for k in range(2, 7):
        hi = 2 * (part_size_bound(k, k) + k)
        direct = {
            (n, m)
            for n in range(1, hi + 1)
            for m in range(1, hi + 1)
            if sg_bipartite(n, m).k == k
        }
        assert set(level_set(k)) == direct


# ----------------------------------------------------------------- quartic


def test_quartic_root_near_sg_at_10_20():
    roots = quartic_roots(10, 20)
    assert any(abs(rp.k - 10) < 2 for rp in roots)
    ks = [rp.k for rp in roots]
    assert ks == sorted(ks)


def test_quartic_symmetric_case_closed_form():
    for n in (10, 36, 100, 450):
        want = -1.0 + math.sqrt(8 * n + 1)
        roots = quartic_roots(n, n)
        assert any(abs(rp.k - want) < 1e-6 for rp in roots), n


@given(
    st.integers(min_value=4, max_value=400),
    st.integers(min_value=4, max_value=4000),
)
@settings(max_examples=60, deadline=None)
def test_quartic_accepted_roots_satisfy_both_equations(n, m):
    for k, i in quartic_roots(n, m):
        r1 = m - (k - 1 + (i - 1) * (i - 2) / 2)
        r2 = n - (k - 1 + (k - i - 1) * (k - i - 2) / 2)
        assert abs(r1) <= 1e-5 and abs(r2) <= 1e-5, (n, m, k, i)


def test_quartic_swapping_sides_preserves_root_levels():
    a = [rp.k for rp in quartic_roots(17, 60)]
    b = [rp.k for rp in quartic_roots(60, 17)]
    assert len(a) == len(b)
    assert all(abs(x - y) < 1e-6 for x, y in zip(a, b))


# ------------------------------------------------------------- conjecture


def test_conjecture_sample_at_peak():
    s = conjecture_sample(10, 15)
    assert s.sg == sg_bipartite(10, 15).k
    assert s.roots == tuple(sorted(s.roots))
    assert abs(s.gap - 1.093774) < 1e-4


def test_conjecture_scan_small_window():
    scan = conjecture_scan(10)
    assert abs(scan.max_gap - 1.093774) < 1e-5
    assert scan.argmax_m == 15
    assert scan.missing == ()
    assert scan.max_gap < 2.0


def test_conjecture_scan_thread_count_is_invisible():
    lone = conjecture_scan(12, threads=1)
    multi = conjecture_scan(12, threads=4)
    assert lone == multi


def test_conjecture_scan_domain_validation():
    with pytest.raises(ValueError):
        conjecture_scan(3)
    with pytest.raises(ValueError):
        conjecture_scan(10, threads=0)


# ------------------------------------------------------------- asymptotics


def test_regime_validation():
    with pytest.raises(ValueError):
        RegimeSpec(RegimeCase.SUPER_QUADRATIC, alpha=1.0, beta=2.0)
    with pytest.raises(ValueError):
        RegimeSpec(RegimeCase.QUADRATIC_DENSE, alpha=0.5)
    with pytest.raises(ValueError):
        RegimeSpec(RegimeCase.HALF_SQUARE_ABOVE, gamma=-0.5)
    with pytest.raises(ValueError):
        RegimeSpec(RegimeCase.HALF_SQUARE_BELOW, gamma=0.0)
    with pytest.raises(ValueError):
        RegimeSpec(RegimeCase.QUADRATIC_SPARSE, alpha=0.5)
    with pytest.raises(ValueError):
        RegimeSpec(RegimeCase.MID_POWER, alpha=1.0, beta=2.0)
    with pytest.raises(ValueError):
        RegimeSpec(RegimeCase.LINEAR, alpha=0.5)


def test_asymptotic_estimate_known_points():
    dense = RegimeSpec(RegimeCase.QUADRATIC_DENSE, alpha=1.0)
    assert asymptotic_estimate(dense, 100) == pytest.approx(5000.0)
    sparse = RegimeSpec(RegimeCase.QUADRATIC_SPARSE, alpha=0.125)
    assert asymptotic_estimate(sparse, 100) == pytest.approx(60.0)
    linear = RegimeSpec(RegimeCase.LINEAR, alpha=1.0)
    assert asymptotic_estimate(linear, 10000) == pytest.approx(200 * math.sqrt(2))
    below = RegimeSpec(RegimeCase.HALF_SQUARE_BELOW, gamma=-1.0)
    assert asymptotic_estimate(below, 44) == 44.0
    above = RegimeSpec(RegimeCase.HALF_SQUARE_ABOVE, gamma=2.0)
    assert asymptotic_estimate(above, 300) == pytest.approx(1050.0)


def test_expected_m_matches_growth_law():
    spec = RegimeSpec(RegimeCase.SUPER_QUADRATIC, alpha=2.0, beta=2.5)
    assert spec.expected_m(10) == round(2.0 * 10**2.5)
    spec = RegimeSpec(RegimeCase.HALF_SQUARE_ABOVE, gamma=1.0)
    assert spec.expected_m(10) == 60
    spec = RegimeSpec(RegimeCase.LINEAR, alpha=3.0)
    assert spec.expected_m(7) == 21
