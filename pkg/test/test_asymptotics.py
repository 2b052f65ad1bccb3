from fractions import Fraction

import pytest
from mpmath import mp

from ranklab.asymptotics import (
    a3_limit_scan,
    bessenrodt_ono_check,
    convexity_ratio_profile,
    convexity_scan,
    convexity_violations,
    equidistribution_deviations,
    equidistribution_report,
    hardy_ramanujan_estimate,
    ingham_estimate,
    partition_triple,
    phi_asymptotic_check,
    phi_ratio,
    rank_mod_asymptotic,
)
from ranklab.asymptotics.tauberian import TauberianTriple
from ranklab.errors import DomainError, PrecisionError
from ranklab.ranks import partition_count
from ranklab.special import PrecisionSpec


# failures of p(a) p(b) > p(a+b) with 2 <= a <= b
SMALL_FAILURES = {(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 3), (3, 4), (3, 5)}


def test_hardy_ramanujan_ratio_tends_to_one():
    ratios = [partition_count(n) / hardy_ramanujan_estimate(n) for n in (100, 400, 1600)]
    assert all(r < 1 for r in ratios)
    assert ratios[0] < ratios[1] < ratios[2]
    assert abs(ratios[1] - 1) < 0.05


def test_ingham_reproduces_hardy_ramanujan():
    triple = partition_triple()
    with mp.workdps(30):
        for n in (1, 10, 1000):
            ingham = ingham_estimate(triple, n)
            hr = hardy_ramanujan_estimate(n)
            assert abs(ingham / hr - 1) < 1e-25


def test_tauberian_domain():
    with pytest.raises(DomainError):
        TauberianTriple(A=0, lam=1, alpha=0)
    with pytest.raises(DomainError):
        hardy_ramanujan_estimate(0)
    with pytest.raises(DomainError):
        rank_mod_asymptotic(3, 3, 10)


def test_rank_mod_asymptotic_is_uniform_in_r():
    assert rank_mod_asymptotic(0, 5, 200) == rank_mod_asymptotic(4, 5, 200)
    assert rank_mod_asymptotic(0, 1, 200) == hardy_ramanujan_estimate(200)


def test_equidistribution_deviations_sum_to_zero():
    for t in (1, 2, 3, 7):
        devs = equidistribution_deviations(t, 50)
        assert sum(devs) == 0
        assert all(isinstance(d, Fraction) for d in devs)


def test_equidistribution_small():
    report = equidistribution_report(3, [60, 20, 40])
    assert report.grid == [20, 40, 60]
    assert [w["n"] for w in report.witnesses] == [20, 40, 60]
    assert all(0 <= v < 1 for v in report.values)
    with pytest.raises(DomainError):
        equidistribution_report(3, [])


@pytest.mark.slow
@pytest.mark.parametrize("t", [2, 3, 4, 5, 7])
def test_equidistribution_to_500(t):
    report = equidistribution_report(t, [100, 200, 500], gate=1e-2)
    assert report.status == "pass"
    assert max(abs(d) for d in equidistribution_deviations(t, 500)) < 1e-3


def test_phi_ratio_matches_eta_correction():
    for eps in (1.0, 0.5):
        with mp.workdps(30):
            assert abs(phi_ratio(eps) - mp.exp(-mp.mpf(eps) / 24)) < 1e-15


def test_phi_asymptotic_check():
    report = phi_asymptotic_check([1.0, 0.5, 0.25, 0.1], gate=1e-2)
    assert report.passed
    assert abs(report.values[1] - 1) < 0.1
    assert abs(report.values[-1] - 1) < 0.01


def test_scans_reject_bad_grids():
    with pytest.raises(DomainError):
        a3_limit_scan(0.25, [0.5, 1.0])
    with pytest.raises(DomainError):
        a3_limit_scan(0.7, [1.0])
    with pytest.raises(PrecisionError):
        a3_limit_scan(0.25, [1.0, 0.01])
    with pytest.raises(PrecisionError):
        a3_limit_scan(0.25, [1.0, 0.1], prec=PrecisionSpec(digits=30))
    with pytest.raises(DomainError):
        phi_asymptotic_check([])


def test_a3_scan_at_moderate_eps():
    report = a3_limit_scan(0.25, [1.0, 0.5], limit_tol=1.0)
    assert report.passed
    for w in report.witnesses:
        assert w["s2_bound"] > 0


@pytest.mark.slow
@pytest.mark.parametrize("u", [0.1, 1 / 6, 0.25, 1 / 3, 0.5])
def test_a3_tends_to_zero(u):
    report = a3_limit_scan(u, [1.0, 0.5, 0.25, 0.1])
    assert report.status == "pass"


@pytest.mark.slow
def test_a3_split_scan():
    report = a3_limit_scan(0.25, [1.0, 0.5], limit_tol=1.0, split=True)
    for w in report.witnesses:
        assert w["split_residual"] < 1e-10 * max(1, w["abs_a3"])
        assert w["route"] == "theta_mu"


def test_convexity_violations_triangle():
    values = [1, 1, 2, 3, 5, 7, 11]
    assert convexity_violations(values, 6) == [(1, b) for b in range(1, 6)] + [(2, 2), (2, 3), (2, 4), (3, 3)]


def test_bessenrodt_ono_small():
    report = bessenrodt_ono_check(40)
    assert report.passed
    outside = {(w["a"], w["b"]) for w in report.witnesses if w["a"] >= 2}
    assert outside == SMALL_FAILURES
    assert {"a": 1, "b": 7, "in_region": False} in report.witnesses
    assert partition_count(4) * partition_count(5) > partition_count(9)
    assert partition_count(2) * partition_count(7) == partition_count(9)


@pytest.mark.slow
def test_bessenrodt_ono_to_300():
    report = bessenrodt_ono_check(300)
    assert report.status == "pass"
    assert report.values[0] == 0


def test_convexity_small_cap():
    report = convexity_scan(0, 3, 60)
    assert report.check == "convexity"
    if report.status == "pass":
        assert not any(w["a"] >= report.values[0] for w in report.witnesses)
    with pytest.raises(DomainError):
        convexity_scan(3, 3, 60)


def test_convexity_without_threshold_fails():
    # N(0,3;2) = 0, so neither a = 1 nor a = 2 is free of failures
    report = convexity_scan(0, 3, 4)
    assert report.status == "not-found"
    assert report.values == [None]
    assert not report.passed


@pytest.mark.slow
def test_convexity_threshold_is_stable():
    at_300 = convexity_scan(0, 3, 300)
    at_200 = convexity_scan(0, 3, 200)
    assert at_300.status == "pass"
    assert at_300.values == at_200.values


def test_convexity_ratio_profile():
    rows = convexity_ratio_profile(0, 3, 40)
    assert [a for a, _, _ in rows] == list(range(1, 21))
    assert all(exact is None or isinstance(exact, Fraction) for _, exact, _ in rows)
