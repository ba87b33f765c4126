import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mexstat.partitions import (
    CapacityError,
    as_partition,
    ascending_partitions,
    count_parts_restricted,
    enumerate_partitions,
    p_count,
    p_even_parts,
    p_odd_parts,
    parts_parity_counts,
)
from mexstat.series import (
    ResidueCondition,
    euler_product,
    parts_parity_series,
    symmetric_residues,
)

P_FIRST = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135]


class TestEnumeration:
    def test_partitions_of_six(self):
        parts = list(enumerate_partitions(6))
        assert len(parts) == 11
        assert parts[0] == (6,)
        assert parts[-1] == (1,) * 6

    def test_partitions_of_four_exact(self):
        assert list(enumerate_partitions(4)) == [
            (4,),
            (3, 1),
            (2, 2),
            (2, 1, 1),
            (1, 1, 1, 1),
        ]

    def test_zero_has_one_empty_partition(self):
        assert list(enumerate_partitions(0)) == [()]

    def test_reverse_lexicographic_order(self):
        for n in range(1, 13):
            got = list(enumerate_partitions(n))
            assert got == sorted(got, reverse=True)
            assert len(set(got)) == len(got)

    def test_canonical_form(self):
        for parts in enumerate_partitions(9):
            assert sum(parts) == 9
            assert all(p >= 1 for p in parts)
            assert all(a >= b for a, b in zip(parts, parts[1:]))

    def test_cap_enforced(self):
        with pytest.raises(CapacityError):
            list(enumerate_partitions(71))
        with pytest.raises(CapacityError):
            list(enumerate_partitions(11, cap=10))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_partitions(-1))

    def test_ascending_iterator_matches_counts(self):
        for n in range(0, 26):
            assert sum(1 for _ in ascending_partitions(n)) == p_count(n)


class TestPartitionCount:
    def test_small_values(self):
        assert [p_count(n) for n in range(len(P_FIRST))] == P_FIRST

    def test_conventions(self):
        assert p_count(0) == 1
        assert p_count(-3) == 0

    def test_known_larger_values(self):
        assert p_count(50) == 204226
        assert p_count(100) == 190569292

    def test_matches_enumeration(self):
        for n in range(0, 41):
            assert p_count(n) == sum(1 for _ in enumerate_partitions(n))

    def test_matches_series_inversion_to_500(self):
        inv = euler_product(500).invert()
        for n in range(0, 501):
            assert inv.coeff(n) == p_count(n)


class TestRestrictedCounts:
    def test_mod32_classes_at_two(self):
        cond = ResidueCondition(32, symmetric_residues(32, (2, 8, 12, 14)))
        assert count_parts_restricted(2, cond) == 1  # just [2]

    def test_two_mod_four_at_two(self):
        assert count_parts_restricted(2, ResidueCondition(4, frozenset({2}))) == 1

    def test_empty_partition_always_counts(self):
        cond = ResidueCondition(7, frozenset({3}))
        assert count_parts_restricted(0, cond) == 1

    def test_exclude_nothing_counts_all_partitions(self):
        cond = ResidueCondition(3, frozenset(), mode="exclude")
        for n in range(0, 20):
            assert count_parts_restricted(n, cond) == p_count(n)

    def test_odd_parts_vs_distinct_parts(self):
        # Euler: partitions into odd parts = partitions into distinct parts
        odd = ResidueCondition(2, frozenset({1}))
        everything_distinct = ResidueCondition(1, frozenset({0}))
        none = ResidueCondition(1, frozenset({0}), mode="exclude")
        for n in range(0, 25):
            distinct = count_parts_restricted(n, none, everything_distinct)
            assert count_parts_restricted(n, odd) == distinct

    def test_distinct_marks_stack_with_allowed(self):
        # part 1 both unrestricted and marked: (1+q)/(1-q) = 1 + 2q + 2q^2 + ...
        cond = ResidueCondition(1, frozenset({0}))
        assert count_parts_restricted(0, cond, cond) == 1
        assert count_parts_restricted(1, cond, cond) == 2

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            count_parts_restricted(-1, ResidueCondition(2, frozenset({1})))


class TestPartsParity:
    def test_small_values(self):
        assert p_even_parts(6) == 6
        assert p_even_parts(0) == 1
        assert p_odd_parts(0) == 0
        assert p_odd_parts(3) == 2

    def test_parity_split_sums_to_p(self):
        for n in range(0, 61):
            assert p_even_parts(n) + p_odd_parts(n) == p_count(n)

    def test_matches_enumeration(self):
        for n in range(1, 21):
            even = sum(1 for parts in enumerate_partitions(n) if len(parts) % 2 == 0)
            assert p_even_parts(n) == even

    def test_matches_generating_series(self):
        even_series = parts_parity_series("even", 60)
        odd_series = parts_parity_series("odd", 60)
        even, odd = parts_parity_counts(60)
        for n in range(0, 61):
            assert even_series.coeff(n) == even[n]
            assert odd_series.coeff(n) == odd[n]


class TestCanonicalization:
    def test_sorts_descending(self):
        assert as_partition([1, 3, 2]) == (3, 2, 1)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            as_partition([2, 0])
        with pytest.raises(ValueError):
            as_partition([-1])

    def test_empty_allowed(self):
        assert as_partition([]) == ()


@given(n=st.integers(min_value=0, max_value=30))
@settings(max_examples=30, deadline=None)
def test_enumeration_count_matches_p(n):
    assert sum(1 for _ in enumerate_partitions(n)) == p_count(n)
