import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp

from ranklab.errors import DomainError, TruncationMismatchError
from ranklab.ranks import partition_numbers, rank_generating_function
from ranklab.series import QSeries, ZQSeries, zqs_eval_root_of_unity, zqs_invert_factor, zqs_mul


N = 8
terms = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(0, N)), st.integers(-9, 9), max_size=8
)


@settings(max_examples=40, deadline=None)
@given(terms, terms)
def test_mul_commutes(a, b):
    a, b = ZQSeries.from_terms(a, N), ZQSeries.from_terms(b, N)
    assert zqs_mul(a, b) == zqs_mul(b, a)


@settings(max_examples=40, deadline=None)
@given(terms, terms, terms)
def test_mul_associates_and_distributes(a, b, c):
    a, b, c = (ZQSeries.from_terms(x, N) for x in (a, b, c))
    assert zqs_mul(zqs_mul(a, b), c) == zqs_mul(a, zqs_mul(b, c))
    assert zqs_mul(a, b + c) == zqs_mul(a, b) + zqs_mul(a, c)


@settings(max_examples=40, deadline=None)
@given(terms, st.sampled_from([-1, 0, 1]), st.integers(1, 4))
def test_divide_undoes_times_factor(a, s, j):
    a = ZQSeries.from_terms(a, N)
    assert a.times_factor(s, j).divide_by_factor(s, j) == a
    assert a.divide_by_factor(s, j).times_factor(s, j) == a


def test_invert_factor_is_geometric():
    inv = zqs_invert_factor(1, 1, 6)
    for n in range(7):
        assert inv.coeff(n, n) == 1
        assert inv.band(n) == n
    assert inv.coeff(0, 1) == 0
    assert inv.coeff(-1, 1) == 0
    assert zqs_mul(inv, ZQSeries.one(6).times_factor(1, 1)) == ZQSeries.one(6)


def test_factor_checks():
    with pytest.raises(DomainError):
        ZQSeries.one(4).times_factor(2, 1)
    with pytest.raises(DomainError):
        ZQSeries.one(4).divide_by_factor(1, 0)
    with pytest.raises(TruncationMismatchError):
        ZQSeries.one(3) + ZQSeries.one(4)


def test_q_shift_raises_the_order():
    a = ZQSeries.from_terms({(1, 0): 1, (-1, 2): 3}, 4)
    b = a.q_shift(3)
    assert b.trunc_order == 7
    assert b.coeff(1, 3) == 1
    assert b.coeff(-1, 5) == 3
    with pytest.raises(DomainError):
        a.q_shift(-1)


def test_z_shift_and_slices():
    a = ZQSeries.from_terms({(0, 1): 2, (2, 3): -1}, 4)
    b = a.z_shift(-2)
    assert b.coeff(-2, 1) == 2
    assert b.coeff(0, 3) == -1
    assert a.z_coefficient(2) == QSeries.from_terms({3: -1}, 4)
    assert a.z_free() == QSeries.from_terms({1: 2}, 4)
    assert a.column_sum() == QSeries.from_terms({1: 2, 3: -1}, 4)
    assert a.band(0) == -1


def test_rank_function_at_z_one_gives_partitions():
    R = rank_generating_function(30)
    assert R.column_sum().tolist() == list(partition_numbers(30))
    assert [int(c) for c in R.fold(1)[:, 0]] == list(partition_numbers(30))


def test_fold_sums_residue_classes():
    R = rank_generating_function(20)
    folded = R.fold(3)
    for n in range(21):
        for r in range(3):
            want = sum(R.coeff(m, n) for m in range(-n, n + 1) if m % 3 == r)
            assert folded[n, r] == want


def test_eval_at_minus_one():
    # R(-1;q) = 1 + q - 2q^2 + 3q^3 - 3q^4 + 3q^5 - 5q^6 + ...
    R = rank_generating_function(6)
    values = zqs_eval_root_of_unity(R, 1, 2)
    expected = [1, 1, -2, 3, -3, 3, -5]
    with mp.workdps(30):
        for got, want in zip(values, expected):
            assert abs(got - want) < 1e-25


def test_eval_index_checks():
    R = rank_generating_function(4)
    with pytest.raises(DomainError):
        zqs_eval_root_of_unity(R, 3, 3)
    with pytest.raises(DomainError):
        zqs_eval_root_of_unity(R, 0, 0)
