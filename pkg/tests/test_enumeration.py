from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from msap.enumeration import (
    brute_force_count,
    count_polygon_mosaics,
    count_quasimosaics,
    growth_ratios,
    quasimosaic_counts,
    scan_order,
)
from msap.errors import BudgetExceeded, DomainError
import oracles

# frozen from oracles.naive_edge_subsets (all 2^E subsets)
NAIVE = {(2, 2): 1, (2, 3): 3, (2, 4): 7, (3, 3): 13, (3, 4): 49}


@pytest.mark.parametrize("mn", sorted(NAIVE))
def test_naive_oracle_values(mn):
    assert oracles.naive_edge_subsets(*mn) == NAIVE[mn]


@pytest.mark.parametrize("mn", sorted(NAIVE))
def test_both_engines_match_naive(mn):
    assert brute_force_count(*mn) == NAIVE[mn]
    assert count_polygon_mosaics(*mn) == NAIVE[mn]


@pytest.mark.parametrize("m, n", [(1, 1), (1, 3), (2, 2), (2, 3)])
def test_tile_conversion_against_all_mosaics(m, n):
    assert oracles.naive_polygon_mosaics(m, n) == count_polygon_mosaics(m, n)


def test_scan_order_prefix():
    seq = scan_order(3, 3).sequence
    assert seq[:6] == ((1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1))
    assert seq[-1] == (3, 3)


@pytest.mark.parametrize("m, n", [(1, 1), (1, 5), (5, 1), (3, 3), (4, 7), (7, 4), (6, 6)])
def test_scan_order_consistent_with_predecessor_rule(m, n):
    order = scan_order(m, n)
    seq = order.sequence
    assert len(seq) == m * n == len(set(seq))
    assert order.predecessor(1, 1) is None
    for prev, cur in zip(seq, seq[1:]):
        assert order.predecessor(*cur) == prev


def test_predecessor_examples():
    assert scan_order(4, 5).predecessor(2, 2) == (1, 3)
    assert scan_order(3, 3).predecessor(2, 3) == (3, 1)


ORACLE_GRIDS = [(m, n) for m in range(1, 7) for n in range(1, 14) if m * (n - 1) + n * (m - 1) <= 40]


@pytest.mark.parametrize("m, n", ORACLE_GRIDS)
def test_dp_matches_oracle(m, n):
    assert count_polygon_mosaics(m, n) == brute_force_count(m, n)


@pytest.mark.parametrize("n", range(1, 21))
def test_single_row_and_two_rows(n):
    assert count_polygon_mosaics(1, n) == 0 == count_polygon_mosaics(n, 1)
    if n >= 2:
        assert count_polygon_mosaics(2, n) == 2 ** (n - 1) - 1


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8))
def test_transpose_symmetry(m, n):
    assert count_polygon_mosaics(m, n) == count_polygon_mosaics(n, m)


def test_counts_are_exact_beyond_64_bits():
    p = count_polygon_mosaics(12, 12)
    assert p > 2 ** 64
    assert count_polygon_mosaics(12, 12) == p


def test_budget_guards():
    with pytest.raises(BudgetExceeded):
        count_polygon_mosaics(30, 30, budget=10)
    with pytest.raises(BudgetExceeded):
        brute_force_count(5, 6)
    assert brute_force_count(5, 6, edge_budget=49) == count_polygon_mosaics(5, 6)
    with pytest.raises(DomainError):
        count_polygon_mosaics(0, 3)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("MSAP_BUDGET_BITS", "3")
    with pytest.raises(BudgetExceeded):
        count_polygon_mosaics(5, 5)
    assert count_polygon_mosaics(3, 9) == 28641


@pytest.mark.parametrize("m, n", [(2, 2), (2, 5), (3, 3), (3, 4), (4, 4), (4, 5), (3, 6)])
def test_quasimosaic_dp_matches_backtracking(m, n):
    assert quasimosaic_counts(m, n) == oracles.backtrack_quasimosaics(m, n)


@pytest.mark.parametrize("m, n", [(4, 4), (4, 6), (5, 5), (6, 4)])
def test_early_quasimosaic_values(m, n):
    q = quasimosaic_counts(m, n)
    assert [q[c] for c in scan_order(m, n).sequence[:6]] == [2, 4, 8, 16, 28, 56]
    assert count_quasimosaics(m, n, 2, 2) == 28


def test_last_quasimosaic_is_polygon_count_plus_trivial():
    for m, n in [(2, 3), (3, 3), (4, 5), (5, 5)]:
        assert count_quasimosaics(m, n, m, n) == count_polygon_mosaics(m, n) + 1


def test_early_growth_ratios():
    g = growth_ratios(5, 5)
    assert [g[c] for c in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)]] == [2] * 5
    assert g[2, 2] == Fraction(7, 4)


@pytest.mark.parametrize("m, n", [(3, 3), (3, 5), (4, 4), (4, 6), (5, 6), (6, 5)])
def test_growth_ratio_invariants(m, n):
    g = growth_ratios(m, n)
    assert g.product() - 1 == count_polygon_mosaics(m, n)
    assert all(1 <= r <= 2 for r in g.ratios.values())
    for j in range(1, n + 1):
        assert g[m, j] == 1
        if j < n:
            assert g[1, j] == 2
    for i in range(1, m + 1):
        assert g[i, n] == 1
        if i < m:
            assert g[i, 1] == 2
    seq = [g.counts[c] for c in scan_order(m, n)]
    assert seq == sorted(seq)


def test_quasimosaic_index_out_of_range():
    with pytest.raises(DomainError):
        count_quasimosaics(3, 3, 4, 1)
