"""Tests for truncated series arithmetic and the concrete generating functions."""

import pytest
from hypothesis import given, strategies as st

from compcount import compositions, series
from compcount.series import RationalGF, TruncatedSeries


# --- series arithmetic ------------------------------------------------------

def test_addition_and_cancellation():
    one_plus_z = TruncatedSeries((1, 1))
    one_minus_z = TruncatedSeries((1, -1))
    assert (one_plus_z + one_minus_z).coefficients == (2, 0)
    z = TruncatedSeries((0, 1))
    assert (z + z).coefficients == (0, 2)


def test_addition_truncates_to_shorter_operand():
    short = TruncatedSeries.zero(3)
    long = TruncatedSeries.zero(5)
    assert (short + long).order == 3
    assert (long + short).order == 3


def test_multiplication():
    one_plus_z = TruncatedSeries((1, 1, 0))
    squared = one_plus_z * one_plus_z
    assert squared.coefficients == (1, 2, 1)
    z_plus_z2 = TruncatedSeries((0, 1, 1, 0))
    assert (z_plus_z2 * z_plus_z2)[3] == 2
    anything = TruncatedSeries((3, -1, 4, -1, 5))
    one = TruncatedSeries((1, 0, 0, 0, 0))
    assert anything * one == anything
    assert (2 * anything).coefficients == (6, -2, 8, -2, 10)


def test_coefficient_beyond_order_is_an_error():
    s = TruncatedSeries((1, 2, 3))
    assert s[2] == 3
    with pytest.raises(IndexError):
        s.coefficient(3)
    with pytest.raises(IndexError):
        s[-1]


def test_shift_keeps_order():
    s = TruncatedSeries((1, 2, 3, 4))
    assert s.shifted(2).coefficients == (0, 0, 1, 2)


# --- rational expansion ------------------------------------------------------

def test_expansion_of_all_compositions_gf():
    expansion = series.series_from_rational(series.gf_all_compositions(), 5)
    assert expansion.coefficients == (0, 1, 2, 4, 8, 16)


def test_expansion_of_geometric_series():
    geometric = RationalGF((1,), (1, -1))
    assert series.series_from_rational(geometric, 3).coefficients == (1, 1, 1, 1)


def test_expansion_of_weak_leading_gf_k2():
    # (1-z)z^2/(1-2z+z^3) collapses to z^2/(1-z-z^2), a shifted Fibonacci
    # series; cross-checked coefficient by coefficient against the counter.
    gf = RationalGF((0, 0, 1, -1), (1, -2, 0, 1))
    expansion = series.series_from_rational(gf, 6)
    assert expansion.coefficients == (0, 0, 1, 1, 2, 3, 5)
    for n in range(7):
        assert expansion[n] == compositions.count_leading_weak(n, 2)


def test_expansion_rejects_non_unit_constant():
    with pytest.raises(ValueError):
        series.series_from_rational(RationalGF((1,), (2, 1)), 4)
    with pytest.raises(ValueError):
        RationalGF((1,), (0, 1))


# --- leading-summand generating functions ------------------------------------

def test_strict_gf_k1_is_z():
    expansion = series.gf_leading_strict(1).expand(8)
    assert expansion.coefficients == (0, 1, 0, 0, 0, 0, 0, 0, 0)


def test_strict_gf_values():
    assert series.gf_leading_strict(3).expand(5)[5] == 2
    k2 = series.gf_leading_strict(2).expand(12)
    assert all(k2[n] == 1 for n in range(2, 13))


def test_weak_gf_values():
    k1 = series.gf_leading_weak(1).expand(9)
    assert k1.coefficients == (0,) + (1,) * 9
    assert series.gf_leading_weak(2).expand(5)[5] == 3


def test_weak_gf_denominator_factorization():
    lhs = TruncatedSeries((1, -1, 0, 0)) * TruncatedSeries((1, -1, -1, 0))
    assert lhs.coefficients == (1, -2, 0, 1)


def test_leading_gfs_match_recurrences():
    for k in range(1, 7):
        strict = series.gf_leading_strict(k).expand(40)
        weak = series.gf_leading_weak(k).expand(40)
        for n in range(41):
            assert strict[n] == compositions.count_leading_strict(n, k)
            assert weak[n] == compositions.count_leading_weak(n, k)


def test_both_strict_denominator_forms_agree():
    for k in range(2, 7):
        plain = RationalGF((0,) * k + (1,), (1,) + (-1,) * (k - 1))
        assert plain.expand(40) == series.gf_leading_strict(k).expand(40)


def test_geometric_block_identity():
    # (1-z)(1 + z + ... + z^(k-1)) telescopes to 1 - z^k
    for k in range(2, 7):
        block = TruncatedSeries((1,) * k + (0,))
        one_minus_z = TruncatedSeries((1, -1) + (0,) * (k - 1))
        expected = [1] + [0] * k
        expected[k] = -1
        assert (one_minus_z * block).coefficients == tuple(expected)


# --- avoid / contain ----------------------------------------------------------

def test_avoiding_gf_values():
    k2 = series.gf_avoiding(2).expand(4)
    assert k2.coefficients[1:] == (1, 1, 2, 4)
    assert series.gf_avoiding(1).expand(1)[1] == 0
    assert series.gf_avoiding(3).expand(3)[3] == 3


def test_containing_gf_values():
    assert series.gf_containing(1).expand(2)[2] == 1
    assert series.gf_containing(2).expand(3)[3] == 2
    assert series.gf_containing(5).expand(4)[4] == 0


def test_avoid_contain_gfs_match_counters():
    for k in range(1, 7):
        avoid = series.gf_avoiding(k).expand(40)
        contain = series.gf_containing(k).expand(40)
        for n in range(41):
            assert avoid[n] == compositions.count_avoiding(n, k)
            assert contain[n] == compositions.count_containing(n, k)


def test_containing_equals_difference_of_expansions():
    for k in range(1, 6):
        everything = series.gf_all_compositions().expand(30)
        avoid = series.gf_avoiding(k).expand(30)
        assert series.gf_containing(k).expand(30) == everything - avoid


# --- distinct-part total series -------------------------------------------------

def test_distinct_total_series_values():
    expansion = series.gf_distinct_total(6)
    assert expansion[0] == 0
    assert expansion[3] == 3
    assert expansion[6] == 11


def test_distinct_total_series_matches_counter():
    expansion = series.gf_distinct_total(40)
    for n in range(41):
        assert expansion[n] == compositions.count_compositions_distinct_total(n)


# --- series identities -----------------------------------------------------------

def test_shift_identity_between_totals():
    order = 40
    strict_sum = TruncatedSeries.zero(order)
    weak_sum = TruncatedSeries.zero(order)
    for k in range(1, order + 1):
        strict_sum = strict_sum + series.gf_leading_strict(k).expand(order)
        weak_sum = weak_sum + series.gf_leading_weak(k).expand(order)
    z = TruncatedSeries((0, 1) + (0,) * (order - 1))
    assert weak_sum.shifted(1) == strict_sum - z
    for n in range(1, order + 1):
        assert strict_sum[n] == compositions.count_leading_strict_total(n)
        assert weak_sum[n] == compositions.leading_weak_total(n)


small_polys = st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=5)


@given(
    na=small_polys,
    nb=small_polys,
    da=small_polys,
    db=small_polys,
    flip_a=st.booleans(),
    flip_b=st.booleans(),
)
def test_expansion_is_multiplicative(na, nb, da, db, flip_a, flip_b):
    da[0] = -1 if flip_a else 1
    db[0] = -1 if flip_b else 1
    a = RationalGF(tuple(na), tuple(da))
    b = RationalGF(tuple(nb), tuple(db))
    assert (a * b).expand(20) == a.expand(20) * b.expand(20)
