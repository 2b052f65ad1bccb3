import pytest

from ranklab.errors import DomainError
from ranklab.ranks import (
    verify_fmk_decomposition,
    verify_gap_positivity,
    verify_lemma_fmk,
    verify_lemma_nonneg,
    verify_lemma_postage,
    verify_low_order_positivity,
)
from ranklab.ranks.lemmas import (
    f1_closed,
    f2_closed,
    gap_series,
    lemma_postage_violations,
    nonneg_series,
    pochhammer_quotient,
    postage_series,
)


def test_postage_coefficients():
    series = postage_series(30)
    # 17 = 3*3 + 4*2 only
    assert (series[17], series[18], series[19]) == (1, 2, 2)
    assert series[5] == 0
    assert lemma_postage_violations(17) == []


def test_postage_to_500():
    assert verify_lemma_postage(500)


@pytest.mark.parametrize("m", range(1, 21))
def test_nonneg(m):
    assert verify_lemma_nonneg(m, 500)


def test_nonneg_rejects_m():
    with pytest.raises(DomainError):
        nonneg_series(0, 10)


def test_first_quotient_closed_form():
    F1 = pochhammer_quotient(1, 12)
    assert F1.z_coefficient(0) == f1_closed(0, 12)
    assert F1.z_coefficient(-3) == f1_closed(3, 12)
    assert f1_closed(2, 6).tolist() == [0, 0, 1, -1, 1, -1, 1]


def test_second_quotient_closed_form():
    F2 = pochhammer_quotient(2, 16)
    for m in range(-5, 6):
        assert F2.z_coefficient(m) == f2_closed(m, 16)
    assert f2_closed(20, 16).tolist() == [0] * 17


def test_two_variable_lemmas():
    assert verify_lemma_fmk(25, 10)
    assert verify_fmk_decomposition(25, 10)


def test_gap_positivity():
    assert gap_series(40)[30] >= 1
    assert verify_gap_positivity(500)


def test_low_order_positivity():
    assert verify_low_order_positivity(100, 37)
