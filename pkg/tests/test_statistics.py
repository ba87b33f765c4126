import pytest

from mexstat.partitions import enumerate_partitions, p_count
from mexstat.statistics import (
    MexParams,
    crank,
    crank_count,
    crank_count_at_least,
    crank_histogram,
    crank_moment,
    crank_moment_enumerated,
    goe_count,
    mex,
    rank,
    rank_count,
    rank_count_at_least,
    rank_count_below,
    rank_histogram,
    rank_moment,
    spt_direct,
)


class TestMex:
    def test_reference_rows(self):
        assert mex((3, 3), MexParams(2, 3)) == 5
        assert mex((6,), MexParams(2, 3)) == 3

    def test_empty_partition(self):
        assert mex((), MexParams(2, 3)) == 3
        assert mex((), MexParams(5, 9)) == 9

    def test_full_mex_column_for_six(self):
        params = MexParams(2, 3)
        got = [mex(p, params) for p in enumerate_partitions(6)]
        assert got == [3, 3, 3, 3, 5, 5, 5, 3, 3, 3, 3]

    def test_params_validation(self):
        with pytest.raises(ValueError):
            MexParams(0, 1)
        with pytest.raises(ValueError):
            MexParams(1, 0)


class TestRankCrank:
    def test_rank_examples(self):
        assert rank((4, 3)) == 2
        assert rank((7,)) == 6
        assert rank((1,) * 5) == -4
        assert rank(()) == 0

    def test_crank_examples(self):
        assert crank((2, 2, 2)) == 2
        assert crank((2, 2, 1, 1)) == -2
        assert crank((3, 2, 2, 1)) == 2
        assert crank((4, 2)) == 4
        assert crank(()) == 0

    def test_crank_histogram_of_six(self):
        assert crank_histogram(6) == {
            6: 1, 4: 1, 3: 1, 2: 1, 1: 1, 0: 1,
            -1: 1, -2: 1, -3: 1, -4: 1, -6: 1,
        }


class TestRankCounts:
    def test_exact_value(self):
        # partitions of 5 by rank: 5->4, 4+1->2, 3+2->1, 3+1+1->0,
        # 2+2+1->-1, 2+1+1+1->-2, 1^5->-4
        assert rank_count(2, 5) == 1
        assert rank_count_at_least(2, 5) == 2  # [5] and [4,1]

    def test_symmetry(self):
        for n in range(1, 31):
            for m in range(0, n + 1):
                assert rank_count(m, n) == rank_count(-m, n)

    def test_row_sum_is_p(self):
        for n in range(1, 31):
            assert sum(rank_count(m, n) for m in range(-n, n + 1)) == p_count(n)

    def test_series_matches_combinatorial(self):
        for n in range(1, 26):
            for m in range(-n, n + 1):
                assert rank_count(m, n, "series") == rank_count(m, n)

    def test_at_least_plus_below_partition(self):
        for n in range(1, 21):
            for j in range(-3, 4):
                assert rank_count_at_least(j, n) + rank_count_below(j, n) == p_count(n)


class TestCrankCounts:
    def test_exact_value(self):
        assert crank_count(2, 6) == 1  # only [2,2,2]

    def test_series_anomaly_at_one(self):
        assert crank_count(0, 1, "series") == -1
        assert crank_count(1, 1, "series") == 1
        assert crank_count(-1, 1, "series") == 1
        assert crank_count(-1, 1, "combinatorial") == 1
        assert crank_count(0, 1, "combinatorial") == 0

    def test_series_matches_combinatorial_from_two(self):
        for n in range(2, 26):
            for m in range(-n, n + 1):
                assert crank_count(m, n, "series") == crank_count(m, n)

    def test_symmetry_combinatorial(self):
        for n in range(2, 31):
            for m in range(0, n + 1):
                assert crank_count(m, n) == crank_count(-m, n)

    def test_at_least_series(self):
        # crank >= 2 column for n = 1..8
        got = [crank_count_at_least(2, n) for n in range(1, 9)]
        assert got == [0, 1, 1, 2, 2, 4, 5, 8]


class TestMoments:
    def test_second_rank_moment_spot(self):
        assert rank_moment(2, 4) == 20

    def test_second_crank_moment_spot(self):
        assert crank_moment(2, 4) == 40

    def test_odd_rank_moments_vanish(self):
        for n in range(1, 41):
            assert rank_moment(1, n) == 0
            assert rank_moment(3, n) == 0

    def test_second_crank_moment_is_two_n_p(self):
        for n in range(1, 41):
            assert crank_moment(2, n) == 2 * n * p_count(n)

    def test_zeroth_moments_give_p(self):
        for n in range(1, 21):
            assert rank_moment(0, n) == p_count(n)
            assert crank_moment(0, n) == p_count(n)

    def test_enumerated_crank_moment_differs_only_at_one(self):
        assert crank_moment_enumerated(2, 1) == 1
        assert crank_moment(2, 1) == 2
        for n in range(2, 31):
            assert crank_moment_enumerated(2, n) == crank_moment(2, n)

    def test_moment_order_capped(self):
        with pytest.raises(ValueError):
            rank_moment(5, 3)


class TestSptGoe:
    def test_spt_small_values(self):
        assert [spt_direct(n) for n in range(1, 6)] == [1, 3, 5, 10, 14]

    def test_spt_via_rank_moment(self):
        for n in range(1, 41):
            assert spt_direct(n) == n * p_count(n) - rank_moment(2, n) // 2
            assert rank_moment(2, n) % 2 == 0

    def test_goe_values(self):
        assert goe_count(8) == 7
        assert goe_count(1) == 0
        assert goe_count(3) == 1  # only 1+1+1

    def test_goe_is_rank_tail(self):
        for n in range(1, 31):
            tail = sum(rank_count(m, n) for m in range(-n, -1))
            assert goe_count(n) == tail

    def test_preconditions(self):
        with pytest.raises(ValueError):
            spt_direct(0)
        with pytest.raises(ValueError):
            goe_count(0)
        with pytest.raises(ValueError):
            rank_histogram(0)
