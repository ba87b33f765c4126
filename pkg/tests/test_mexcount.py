import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mexstat.mexcount import (
    mex_census,
    p_mex_enum,
    p_mex_recurrence,
    p_mex_series,
    pbar_mex_enum,
    pbar_mex_recurrence,
    pbar_mex_series,
)
from mexstat.partitions import CapacityError, p_count
from mexstat.statistics import MexParams


class TestEnumeration:
    def test_reference_pair(self):
        params = MexParams(2, 3)
        assert p_mex_enum(params, 6) == 8
        assert pbar_mex_enum(params, 6) == 3

    def test_three_one_at_eight(self):
        assert p_mex_enum(MexParams(3, 1), 8) == 10

    def test_n_zero(self):
        for params in (MexParams(1, 1), MexParams(4, 7), MexParams(10, 3)):
            assert p_mex_enum(params, 0) == 1
            assert pbar_mex_enum(params, 0) == 0

    def test_cap(self):
        with pytest.raises(CapacityError):
            p_mex_enum(MexParams(2, 3), 71)
        with pytest.raises(CapacityError):
            p_mex_enum(MexParams(2, 3), 12, cap=10)


class TestSeries:
    def test_row_3_2(self):
        assert p_mex_series(MexParams(3, 2), 5) == (1, 1, 1, 2, 3, 4)

    def test_barred_row_1_2(self):
        assert pbar_mex_series(MexParams(1, 2), 8) == (0, 0, 1, 1, 2, 2, 4, 5, 8)

    def test_a_above_n_gives_p(self):
        row = p_mex_series(MexParams(5, 11), 10)
        assert row == tuple(p_count(n) for n in range(11))

    def test_precision_zero(self):
        assert p_mex_series(MexParams(1, 1), 0) == (1,)


class TestRecurrence:
    def test_reference_values(self):
        assert p_mex_recurrence(MexParams(2, 3), 6) == 8
        assert p_mex_recurrence(MexParams(3, 6), 5) == 7  # a > n, so p(5)
        assert p_mex_recurrence(MexParams(1, 1), 4) == 3

    def test_negative_n_is_zero(self):
        assert p_mex_recurrence(MexParams(2, 3), -1) == 0
        assert pbar_mex_recurrence(MexParams(2, 3), -4) == 0


class TestAgreement:
    def test_three_methods_small_sweep(self):
        for A in range(1, 5):
            for a in range(1, 7):
                params = MexParams(A, a)
                row = p_mex_series(params, 18)
                for n in range(0, 19):
                    enum = p_mex_enum(params, n)
                    rec = p_mex_recurrence(params, n)
                    assert enum == rec == row[n], (A, a, n)

    def test_complementarity(self):
        for A in range(1, 5):
            for a in range(1, 7):
                params = MexParams(A, a)
                for n in range(0, 19):
                    assert p_mex_enum(params, n) + pbar_mex_enum(params, n) == p_count(n)

    def test_monotone_sanity(self):
        for A in range(1, 5):
            for a in range(1, 7):
                row = p_mex_series(MexParams(A, a), 25)
                for n in range(0, 26):
                    assert 0 <= row[n] <= p_count(n)

    def test_census_matches_single_pair_calls(self):
        census = mex_census(12, 6, 4)
        for A in range(1, 5):
            for a in range(1, 7):
                params = MexParams(A, a)
                assert census[(A, a)] == (p_mex_enum(params, 12), pbar_mex_enum(params, 12))

    def test_census_at_zero(self):
        census = mex_census(0, 3, 3)
        assert all(v == (1, 0) for v in census.values())


@given(
    A=st.integers(min_value=1, max_value=6),
    a=st.integers(min_value=1, max_value=9),
    n=st.integers(min_value=0, max_value=22),
)
@settings(max_examples=40, deadline=None)
def test_series_equals_enumeration(A, a, n):
    params = MexParams(A, a)
    assert p_mex_series(params, n)[n] == p_mex_enum(params, n)
