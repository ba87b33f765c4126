import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mexstat.series import (
    ResidueCondition,
    TruncatedSeries,
    alternating_theta,
    alternating_theta_bilateral,
    cauchy_sum_specialized,
    crank_generating_series,
    euler_product,
    jtp_specialized,
    partition_generating_series,
    parts_parity_series,
    pochhammer_finite,
    rank_generating_series,
    residue_product,
    second_crank_moment_series,
    second_rank_moment_series,
    symmetric_residues,
)

ONES = TruncatedSeries([1, 1, 1, 1])


def series(*coeffs):
    return TruncatedSeries(coeffs)


class TestConstruction:
    def test_constant_one(self):
        s = series(1)
        assert s.precision == 0
        assert s.coeffs == (1,)

    def test_direct_coeffs(self):
        s = series(1, -1, -1)
        assert s.precision == 2
        assert s.coeffs == (1, -1, -1)

    def test_pure_q(self):
        assert series(0, 1).coeffs == (0, 1)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries([])

    def test_non_integer_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries([1, 0.5])

    def test_coeff_out_of_range(self):
        with pytest.raises(ValueError):
            series(1, 2).coeff(5)

    def test_truncate_never_extends(self):
        s = series(1, 2, 3)
        assert s.truncate(1).coeffs == (1, 2)
        with pytest.raises(ValueError):
            s.truncate(7)


class TestArithmetic:
    def test_telescoping_product(self):
        lhs = series(1, -1, 0, 0) * series(1, 1, 1, 1)
        assert lhs.coeffs == (1, 0, 0, 0)

    def test_one_is_identity(self):
        s = series(3, -2, 5, 0, 7)
        one = TruncatedSeries([1] + [0] * 4)
        assert (one * s).coeffs == s.coeffs

    def test_two_factor_product(self):
        # (1-q)(1-q^2) expanded by hand
        prod = series(1, -1, 0, 0) * series(1, 0, -1, 0)
        assert prod.coeffs == (1, -1, -1, 1)

    def test_precision_is_min(self):
        a = series(1, 1, 1, 1, 1)
        b = series(1, 1)
        assert (a + b).precision == 1
        assert (a - b).precision == 1
        assert (a * b).precision == 1

    def test_int_scaling(self):
        assert (3 * series(1, -2)).coeffs == (3, -6)


class TestInvert:
    def test_geometric(self):
        inv = series(1, -1, 0, 0, 0).invert()
        assert inv.coeffs == (1, 1, 1, 1, 1)

    def test_partition_numbers(self):
        inv = euler_product(10).invert()
        assert inv.coeff(6) == 11

    def test_involution(self):
        s = series(1, -1, -1, 0, 0, 1)
        assert s.invert().invert() == s

    def test_negative_unit_constant(self):
        s = series(-1, 4, 2)
        assert (s * s.invert()).coeffs == (1, 0, 0)

    def test_non_unit_rejected(self):
        with pytest.raises(ValueError):
            series(2, 1).invert()
        with pytest.raises(ValueError):
            series(0, 1).invert()


class TestEulerProduct:
    def test_precision_seven(self):
        assert euler_product(7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)

    def test_precision_zero(self):
        assert euler_product(0).coeffs == (1,)

    def test_third_pentagonal_pair(self):
        e = euler_product(20)
        assert e.coeff(12) == -1
        assert e.coeff(15) == -1

    def test_matches_literal_product_to_200(self):
        literal = residue_product(ResidueCondition(1, frozenset({0})), 200)
        assert euler_product(200) == literal


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer_finite(0, 4).coeffs == (1, 0, 0, 0, 0)

    def test_two_factors(self):
        assert pochhammer_finite(2, 3).coeffs == (1, -1, -1, 1)

    def test_single_factor(self):
        assert pochhammer_finite(1, 2).coeffs == (1, -1, 0)


class TestAlternatingTheta:
    def test_squares(self):
        t = alternating_theta(lambda n: n * n, 0, 3)
        assert t.coeffs == (1, -1, 0, 0)

    def test_pentagonal_companions_reproduce_euler(self):
        both = alternating_theta(lambda m: m * (3 * m - 1) // 2, 0, 60) + alternating_theta(
            lambda m: m * (3 * m + 1) // 2, 1, 60
        )
        assert both == euler_product(60)

    def test_mex_numerator_shape(self):
        # A=4, a=1: exponents 0, 1, 6, 15, ...
        t = alternating_theta(lambda n: 4 * n * (n - 1) // 2 + n, 0, 15)
        nz = {e: c for e, c in enumerate(t.coeffs) if c}
        assert nz == {0: 1, 1: -1, 6: 1, 15: -1}

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            alternating_theta(lambda n: n - 5, 0, 10)

    def test_non_growing_exponent_hits_cap(self):
        with pytest.raises(ValueError):
            alternating_theta(lambda n: 0, 0, 3)


class TestResidueProduct:
    def test_two_mod_four(self):
        cond = ResidueCondition(4, frozenset({2}))
        # (1-q^2)(1-q^6) expanded by hand
        assert residue_product(cond, 6).coeffs == (1, 0, -1, 0, 0, 0, -1)

    def test_exclude_empty_equals_euler(self):
        cond = ResidueCondition(5, frozenset(), mode="exclude")
        assert residue_product(cond, 120) == euler_product(120)

    def test_plus_sign_distinct_part_classes(self):
        cond = ResidueCondition(40, symmetric_residues(40, (8, 12)), sign="plus")
        s = residue_product(cond, 21)
        nz = {e: c for e, c in enumerate(s.coeffs) if c}
        assert nz == {0: 1, 8: 1, 12: 1, 20: 1}  # 8, 12, and 8+12

    def test_residue_validation(self):
        with pytest.raises(ValueError):
            ResidueCondition(4, frozenset({5}))
        with pytest.raises(ValueError):
            ResidueCondition(4, frozenset(), mode="include")
        with pytest.raises(ValueError):
            ResidueCondition(0, frozenset({0}))


class TestJtp:
    def test_even_1_1_sum_is_alternating_squares(self):
        s = jtp_specialized(1, 1, "even", "sum", 10)
        nz = {e: c for e, c in enumerate(s.coeffs) if c}
        assert nz == {0: 1, 1: -2, 4: 2, 9: -2}

    def test_odd_1_1_both_sides_agree(self):
        assert jtp_specialized(1, 1, "odd", "sum", 20) == jtp_specialized(
            1, 1, "odd", "product", 20
        )

    def test_even_2_1_product_factors(self):
        # modulus 4 with i=1: classes 4, 1, 3 -> first factors (1-q)(1-q^3)(1-q^4)
        s = jtp_specialized(2, 1, "even", "product", 4)
        assert s.coeffs == (1, -1, 0, -1, 0)

    def test_i_out_of_range(self):
        with pytest.raises(ValueError):
            jtp_specialized(2, 4, "even", "sum", 10)
        with pytest.raises(ValueError):
            jtp_specialized(2, 5, "odd", "sum", 10)

    @pytest.mark.parametrize("parity", ["even", "odd"])
    def test_sum_equals_product_small_sweep(self, parity):
        for k in range(1, 4):
            modulus = 2 * k if parity == "even" else 2 * k + 1
            for i in range(1, modulus):
                assert jtp_specialized(k, i, parity, "sum", 80) == jtp_specialized(
                    k, i, parity, "product", 80
                ), (k, i, parity)


class TestNamedSeries:
    def test_partition_generating_series(self):
        pg = partition_generating_series(9)
        assert pg.coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30)

    def test_rank_series_row_sums_to_partition_count(self):
        n = 9
        total = sum(
            rank_generating_series(m, n).coeff(n) for m in range(-n, n + 1)
        )
        assert total == 30

    def test_crank_anomaly_at_one(self):
        assert crank_generating_series(0, 1).coeff(1) == -1
        assert crank_generating_series(1, 1).coeff(1) == 1

    def test_second_moment_series_small_values(self):
        # ranks of the partitions of 4 are 3, 1, 0, -1, -3
        assert second_rank_moment_series(4).coeff(4) == 20
        # second crank moment is 2*n*p(n)
        m2 = second_crank_moment_series(8)
        assert [m2.coeff(n) for n in range(1, 9)] == [
            2 * n * p for n, p in zip(range(1, 9), (1, 2, 3, 5, 7, 11, 15, 22))
        ]

    def test_cauchy_sum_terminates_and_matches(self):
        lhs = cauchy_sum_specialized(1, False, 40)
        assert lhs == partition_generating_series(40)

    def test_parts_parity_series_constant_terms(self):
        assert parts_parity_series("even", 5).coeff(0) == 1
        assert parts_parity_series("odd", 5).coeff(0) == 0


small_series = st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=12).map(
    TruncatedSeries
)
unit_series = st.tuples(
    st.sampled_from([1, -1]),
    st.lists(st.integers(min_value=-9, max_value=9), min_size=0, max_size=11),
).map(lambda t: TruncatedSeries([t[0], *t[1]]))


class TestAlgebraProperties:
    @given(a=small_series, b=small_series)
    @settings(max_examples=60, deadline=None)
    def test_mul_commutative(self, a, b):
        assert a * b == b * a

    @given(a=small_series, b=small_series, c=small_series)
    @settings(max_examples=60, deadline=None)
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(a=small_series, b=small_series, c=small_series)
    @settings(max_examples=60, deadline=None)
    def test_mul_distributes(self, a, b, c):
        p = min(a.precision, b.precision, c.precision)
        lhs = (a * (b + c)).truncate(p)
        rhs = (a * b + a * c).truncate(p)
        assert lhs == rhs

    @given(s=unit_series)
    @settings(max_examples=60, deadline=None)
    def test_invert_roundtrip(self, s):
        one = TruncatedSeries([1] + [0] * s.precision)
        assert s * s.invert() == one
        assert s.invert().invert() == s
