import pytest
from hypothesis import given, settings, strategies as st

from ranklab.errors import DomainError, TruncationMismatchError
from ranklab.ranks import partition_numbers
from ranklab.series import QSeries, qs_invert, qs_mul


N = 12
coeff_lists = st.lists(st.integers(-50, 50), min_size=N + 1, max_size=N + 1)


@settings(max_examples=50, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_axioms(a, b, c):
    a, b, c = (QSeries(x, N) for x in (a, b, c))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * QSeries.one(N) == a
    assert a - a == QSeries.zero(N)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([1, -1]), st.lists(st.integers(-20, 20), min_size=N, max_size=N))
def test_invert_units(c0, rest):
    a = QSeries([c0] + rest, N)
    assert qs_mul(a, qs_invert(a)) == QSeries.one(N)


def test_invert_rejects_non_units():
    with pytest.raises(DomainError):
        QSeries([2, 1, 0], 2).invert()
    with pytest.raises(DomainError):
        QSeries.monomial(1, 4).invert()


def test_euler_product_and_partitions():
    N = 40
    phi = QSeries.one(N)
    for j in range(1, N + 1):
        phi = phi.times_factor(j)

    # pentagonal number theorem
    pentagonal = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1, 22: 1, 26: 1, 35: -1, 40: -1}
    assert phi == QSeries.from_terms(pentagonal, N)

    assert phi.invert().tolist() == list(partition_numbers(N))

    divided = QSeries.one(N)
    for j in range(1, N + 1):
        divided = divided.divide_by_factor(j)
    assert divided == phi.invert()


def test_mixed_truncation_orders_raise():
    with pytest.raises(TruncationMismatchError):
        QSeries.one(3) + QSeries.one(4)
    with pytest.raises(TruncationMismatchError):
        QSeries.one(3) * QSeries.one(4)


def test_constructors_and_shift():
    assert QSeries.geometric(3, 10).tolist() == [1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0]
    assert QSeries.geometric(2, 6, start=1).tolist() == [0, 1, 0, 1, 0, 1, 0]
    assert QSeries.one(5).shift(2) == QSeries.monomial(2, 5)
    assert QSeries.one(5).shift(7) == QSeries.zero(5)
    assert QSeries.from_terms({3: 2, 9: 5}, 4).tolist() == [0, 0, 0, 2, 0]
    assert QSeries.monomial(2, 6).truncate(3).trunc_order == 3

    with pytest.raises(DomainError):
        QSeries.one(3).truncate(5)
    with pytest.raises(DomainError):
        QSeries.one(3).shift(-1)
    with pytest.raises(DomainError):
        QSeries([1, 2], 3)


def test_indexing_outside_the_truncation():
    a = QSeries.one(4)
    assert a[0] == 1 and a[4] == 0
    with pytest.raises(IndexError):
        a[5]
    with pytest.raises(IndexError):
        a[-1]


def test_big_integer_coefficients():
    # p(n) exceeds 64 bits near n = 416
    p = QSeries.one(450)
    for j in range(1, 451):
        p = p.divide_by_factor(j)
    assert p[450] == partition_numbers(450)[450]
    assert p[450] > 2**64
