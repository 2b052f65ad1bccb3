"""Exhaustive convexity scans f(a) f(b) > f(a+b) over the triangle
1 <= a <= b, a + b <= n_cap, with f = N(r,t;.) or p."""

from collections import defaultdict
from fractions import Fraction

from ranklab.errors import DomainError
from ranklab.ranks import partition_numbers, rank_mod_table
from ranklab.reports import ScanReport, PASS, FAIL, NOT_FOUND
from .tauberian import hardy_ramanujan_estimate


# p(a) p(b) > p(a+b) is claimed for a, b >= 2 and a + b >= 10
BO_MIN_PART = 2
BO_MIN_SUM = 10


def convexity_violations(values, n_cap: int) -> list[tuple[int, int]]:
    """pairs (a, b), a <= b, with values[a] values[b] <= values[a+b]"""
    return [
        (a, b)
        for a in range(1, n_cap // 2 + 1)
        for b in range(a, n_cap - a + 1)
        if values[a] * values[b] <= values[a + b]
    ]


def convexity_scan(r: int, t: int, n_cap: int) -> ScanReport:
    """Smallest T such that N(r,t;a) N(r,t;b) > N(r,t;a+b) for all
    T <= a <= b with a + b <= n_cap.

    The frontier lists, for each a that still fails, the number of failing
    b and the largest one. When no a <= n_cap/2 is free of failures the
    status is "not-found".
    """
    _check_residue(r, t)
    if n_cap < 2:
        raise DomainError(f"n_cap must be >= 2, got {n_cap}")
    table = rank_mod_table(t, n_cap)
    values = [table.count(r, n) for n in range(n_cap + 1)]
    violations = convexity_violations(values, n_cap)

    by_a = defaultdict(list)
    for a, b in violations:
        by_a[a] += [b]
    frontier = [
        {"a": a, "failing_b": len(bs), "max_b": max(bs)} for a, bs in sorted(by_a.items())
    ]

    threshold = max(by_a, default=0) + 1
    found = threshold <= n_cap // 2
    return ScanReport(
        check="convexity",
        params={"r": r, "t": t, "n_cap": n_cap},
        grid=[1, n_cap // 2],
        values=[threshold if found else None],
        gate={"threshold_within_cap": True},
        status=PASS if found else NOT_FOUND,
        witnesses=frontier,
    )


def convexity_ratio_profile(r: int, t: int, n_cap: int, digits: int = 30) -> list[tuple]:
    """(a, exact, asymptotic) along a = b for a = 1..n_cap/2, where exact is
    N(r,t;a)^2 / N(r,t;2a) (None if the denominator vanishes) and the
    asymptotic ratio uses Hardy-Ramanujan for p(n)/t."""
    _check_residue(r, t)
    table = rank_mod_table(t, n_cap)
    rows = []
    for a in range(1, n_cap // 2 + 1):
        num, den = table.count(r, a) ** 2, table.count(r, 2 * a)
        exact = Fraction(num, den) if den else None
        hr = hardy_ramanujan_estimate(a, digits) / t
        asymptotic = hr * hr / (hardy_ramanujan_estimate(2 * a, digits) / t)
        rows += [(a, exact, asymptotic)]
    return rows


def bessenrodt_ono_check(n_cap: int) -> ScanReport:
    """p(a) p(b) > p(a+b) for every pair with a, b >= 2 and a + b >= 10 up to
    n_cap. Failures outside that region are listed as witnesses."""
    if n_cap < 2:
        raise DomainError(f"n_cap must be >= 2, got {n_cap}")
    p = partition_numbers(n_cap)
    violations = convexity_violations(p, n_cap)
    inside = {(a, b) for a, b in violations if a >= BO_MIN_PART and a + b >= BO_MIN_SUM}
    return ScanReport(
        check="bessenrodt_ono",
        params={"n_cap": n_cap},
        grid=[1, n_cap // 2],
        values=[len(inside), len(violations) - len(inside)],
        gate={"min_part": BO_MIN_PART, "min_sum": BO_MIN_SUM, "in_region_failures": 0},
        status=FAIL if inside else PASS,
        witnesses=[{"a": a, "b": b, "in_region": (a, b) in inside} for a, b in violations],
    )


def _check_residue(r: int, t: int) -> None:
    if t < 1:
        raise DomainError(f"modulus must be >= 1, got {t}")
    if not 0 <= r < t:
        raise DomainError(f"residue must lie in 0..{t - 1}, got {r}")
