import pytest
from hypothesis import given, settings, strategies as st

from ranklab.errors import DomainError, OracleLimitError
from ranklab.ranks import (
    brute_force_rank_histogram,
    partition_count,
    partition_numbers,
    partitions_desc,
    rank,
    rank_mod_table,
    rank_table,
)


def test_partition_numbers():
    assert partition_numbers(10) == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)
    assert partition_count(100) == 190569292
    with pytest.raises(DomainError):
        partition_count(-1)


def test_partitions_desc_order():
    assert list(partitions_desc(5)) == [
        (5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)
    ]
    for n in range(21):
        assert sum(1 for _ in partitions_desc(n)) == partition_count(n)


def test_rank():
    assert rank((4, 2, 1)) == 1
    assert rank((1, 1, 1)) == -2
    assert rank((5,)) == 4


def test_table_matches_enumeration():
    table = rank_table(40)
    for n in range(41):
        assert table.histogram(n) == brute_force_rank_histogram(n)


def test_oracle_limit():
    with pytest.raises(OracleLimitError):
        brute_force_rank_histogram(61)


def test_known_counts():
    table = rank_table(10)
    assert table.count(1, 7) == 1
    assert table.count(1, 6) == 2
    assert table.count(0, 0) == 1
    assert table.count(11, 10) == 0
    with pytest.raises(IndexError):
        table.count(0, 11)


@settings(deadline=None)
@given(st.integers(0, 60), st.integers(-70, 70))
def test_rank_symmetry(n, m):
    assert rank_table(60).count(m, n) == rank_table(60).count(-m, n)


@settings(deadline=None)
@given(st.integers(0, 80))
def test_rows_sum_to_partition_numbers(n):
    assert rank_table(80).row_total(n) == partition_count(n)


@settings(deadline=None)
@given(st.integers(1, 9), st.integers(0, 60))
def test_rank_mod_folds_the_table(t, n):
    table = rank_table(60)
    mod = rank_mod_table(t, 60)
    for r in range(t):
        assert mod.count(r, n) == sum(table.count(m, n) for m in range(-n, n + 1) if m % t == r)
    assert sum(mod.count(r, n) for r in range(t)) == partition_count(n)


def test_csv_rows():
    table = rank_table(3)
    rows = table.csv_rows()
    assert rows[0] == (0, 0, 1)
    assert len(rows) == sum(2 * n + 1 for n in range(4))
    mod = table.fold(2)
    # ranks of 3 are 2, 0 and -2
    assert mod.csv_rows()[-2:] == [(3, 0, 3), (3, 1, 0)]
