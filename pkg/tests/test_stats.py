"""Statistics and the aggregate excess quantities."""

import pytest

from beckpart import (
    Family,
    Partition,
    beck_b,
    beck_b_prime,
    count,
    enumerate_family,
    excess_Ert,
    excess_Ert_flat,
    parse_partition,
    stat_report,
    total_repeated_values,
    total_residue_parts,
)


class TestStatReport:
    def test_flat_witness_fixture(self):
        # a flat partition whose signed term ell_t - d_t is negative
        rep = stat_report(Partition((10, 7, 7, 5, 4, 3)), 4, 2)
        assert rep.ell_t == 1 and rep.d_t == 3
        assert rep.ell_t - rep.d_t == -2

    def test_empty(self):
        rep = stat_report(Partition(), 4, 2)
        assert (rep.ell, rep.ell_t, rep.ell_bar_t, rep.d_t, rep.ell_bar) == (0, 0, 0, 0, 0)

    def test_repeat_counts(self):
        rep = stat_report(parse_partition("5^2,4,3^3,1^2"), 4, 2)
        assert rep.ell_bar_t == 3  # 5, 3 and 1 appear at least twice
        assert rep.ell_bar == 4

    def test_d_t_counts_final_gap(self):
        assert stat_report(Partition((3,)), 4, 3).d_t == 1
        assert stat_report(Partition((3,)), 4, 2).d_t == 1

    def test_t_range_validated(self):
        with pytest.raises(ValueError):
            stat_report(Partition((3,)), 4, 4)
        with pytest.raises(ValueError):
            stat_report(Partition((3,)), 4, 0)


class TestAggregates:
    def test_excess_fixture(self):
        # O_2(5) carries 9 odd parts, D_2(5) carries 5 distinct values
        assert total_residue_parts(5, 2, 1) == 9
        assert total_repeated_values(5, 2, 1) == 5
        assert excess_Ert(5, 2, 1) == 4

    def test_zero_size(self):
        assert excess_Ert(0, 3, 2) == 0
        assert beck_b(0, 4) == 0
        assert beck_b_prime(0, 4) == 0

    def test_beck_fixtures(self):
        assert beck_b(5, 2) == 4
        assert beck_b_prime(5, 2) == 1

    def test_totals_count_decorated_families(self):
        for r in (2, 3):
            for n in range(0, 15):
                for t in range(1, r):
                    assert total_residue_parts(n, r, t) == count(n, Family.O_STAR, r, t)
                    assert total_repeated_values(n, r, t) == count(n, Family.F_BAR, r, t)


class TestInvariants:
    def test_repeat_thresholds_sum_to_length(self):
        # summing ell_bar_t over t = 1..r-1 recounts every part of a bounded partition
        for r in range(2, 6):
            for n in range(0, 31):
                for lam in enumerate_family(n, Family.D_R, r):
                    mult = lam.multiplicities()
                    total = sum(
                        sum(1 for c in mult.values() if c >= t) for t in range(1, r))
                    assert total == len(lam)

    def test_excess_agrees_with_flat_route(self):
        for r in range(2, 6):
            for n in range(0, 31):
                for t in range(1, r):
                    assert excess_Ert(n, r, t) == excess_Ert_flat(n, r, t)

    def test_excess_nonnegative(self):
        for r in range(2, 6):
            for n in range(0, 31):
                for t in range(1, r):
                    assert excess_Ert(n, r, t) >= 0
