"""Exact coefficient checks behind strict monotonicity of N(m,n).

Every check expands both sides as truncated series and compares integers;
nothing here is sampled. Each `verify_*` has a `*_violations` companion
that returns the failing coefficients as ViolationRecords.
"""

from ranklab.errors import DomainError
from ranklab.series import QSeries, ZQSeries
from .checks import ViolationRecord
from .tables import rank_generating_function


def postage_series(N: int) -> QSeries:
    """sum_j q^(3j) * sum_k q^(4k)"""
    return QSeries.geometric(3, N) * QSeries.geometric(4, N)


def lemma_postage_violations(N_max: int) -> list[ViolationRecord]:
    series = postage_series(N_max)
    return _below(series, 2, 18, N_max, "lemma_postage")


def verify_lemma_postage(N_max: int) -> bool:
    return not lemma_postage_violations(N_max)


def nonneg_series(m: int, N: int) -> QSeries:
    """(1 - q^(m+1)) / ((1 - q^2)(1 - q^3))"""
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    num = QSeries.one(N) - QSeries.monomial(m + 1, N)
    return num.divide_by_factor(2).divide_by_factor(3)


def lemma_nonneg_violations(m: int, N_max: int) -> list[ViolationRecord]:
    return _below(nonneg_series(m, N_max), 0, 0, N_max, f"lemma_nonneg_m{m}")


def verify_lemma_nonneg(m: int, N_max: int) -> bool:
    return not lemma_nonneg_violations(m, N_max)


def pochhammer_quotient(k: int, N: int) -> ZQSeries:
    """(1-q) / ((aq;q)_k (q/a;q)_k), with a carried as z"""
    out = ZQSeries.one(N).times_factor(0, 1)
    for j in range(1, k + 1):
        out = out.divide_by_factor(1, j).divide_by_factor(-1, j)
    return out


def f1_closed(m: int, N: int) -> QSeries:
    """coefficient of a^m in the first display: sum_{n >= |m|} (-1)^(m+n) q^n"""
    m = abs(m)
    return QSeries.from_terms(
        {n: (-1) ** (m + n) for n in range(m, N + 1)}, N
    )


def f2_closed(m: int, N: int) -> QSeries:
    """coefficient of a^m in the second display"""
    m = abs(m)
    if m == 0:
        return (
            -QSeries.monomial(1, N)
            + QSeries.geometric(3, N)
            + QSeries.geometric(4, N, start=2)
            + QSeries.monomial(8, N).divide_by_factor(3).divide_by_factor(4)
        )
    if m > N:
        return QSeries.zero(N)
    return nonneg_series(m, N).shift(m) + QSeries.monomial(2 * m + 3, N).divide_by_factor(
        3
    ).divide_by_factor(4)


def lemma_fmk_violations(N_max: int, m_band: int) -> list[ViolationRecord]:
    violations = []
    first = pochhammer_quotient(1, N_max)
    second = pochhammer_quotient(2, N_max)
    for m in range(-m_band, m_band + 1):
        violations += _mismatch(first.z_coefficient(m), f1_closed(m, N_max), m, "lemma_fmk_first")
        violations += _mismatch(second.z_coefficient(m), f2_closed(m, N_max), m, "lemma_fmk_second")
    return violations


def verify_lemma_fmk(N_max: int, m_band: int) -> bool:
    return not lemma_fmk_violations(N_max, m_band)


def fmk_decomposition_violations(N_max: int, m_band: int) -> list[ViolationRecord]:
    """Checks (1-q) R(a;q) against its regrouping by a-power:

        1 - q + sum_{k>=1} q^(k^2) f_{0,k}
          + sum_{m>=1} (a^m + a^-m)(q f_{m,1} + q^4 f_{m,2} + sum_{k>=3} q^(k^2) f_{m,k})

    with f_{m,1}, f_{m,2} taken from their closed forms and the k >= 3 pieces
    from direct expansion.
    """
    N = N_max
    lhs = rank_generating_function(N).times_factor(0, 1)
    higher = [
        (k, pochhammer_quotient(k, N - k * k)) for k in range(3, N + 1) if k * k <= N
    ]

    violations = []
    for m in range(-m_band, m_band + 1):
        rhs = f1_closed(m, N).shift(1) + f2_closed(m, N).shift(4)
        if m == 0:
            rhs = rhs + QSeries.one(N) - QSeries.monomial(1, N)
        for k, Fk in higher:
            # a^-m uses f_{m,k}, which is where the a <-> 1/a symmetry enters
            piece = Fk.z_coefficient(abs(m)).coeffs.tolist() + [0] * (k * k)
            rhs = rhs + QSeries(piece, N).shift(k * k)
        violations += _mismatch(lhs.z_coefficient(m), rhs, m, "fmk_decomposition")
    return violations


def verify_fmk_decomposition(N_max: int, m_band: int) -> bool:
    return not fmk_decomposition_violations(N_max, m_band)


def gap_series(N: int) -> QSeries:
    """q^12 / ((1-q^3)(1-q^4)) - sum_{n>=0} q^(2n+2)"""
    return QSeries.monomial(12, N).divide_by_factor(3).divide_by_factor(
        4
    ) - QSeries.geometric(2, N, start=2)


def gap_positivity_violations(N_max: int) -> list[ViolationRecord]:
    return _below(gap_series(N_max), 1, 30, N_max, "gap_positivity")


def verify_gap_positivity(N_max: int) -> bool:
    return not gap_positivity_violations(N_max)


def low_order_positivity_violations(N_max: int, m_max: int) -> list[ViolationRecord]:
    """coefficients of a^m q^n in q f_{m,1} + q^4 f_{m,2} are >= 1 for m >= 1,
    n >= 2m + 25, with f_{m,k} read off the direct expansions"""
    first = pochhammer_quotient(1, N_max)
    second = pochhammer_quotient(2, N_max)
    violations = []
    for m in range(1, m_max + 1):
        series = first.z_coefficient(m).shift(1) + second.z_coefficient(m).shift(4)
        for n in range(2 * m + 25, N_max + 1):
            if series[n] < 1:
                violations += [ViolationRecord("low_order_positivity", (m, n), series[n], 1)]
    return violations


def verify_low_order_positivity(N_max: int, m_max: int) -> bool:
    return not low_order_positivity_violations(N_max, m_max)


def _below(series: QSeries, bound: int, lo: int, hi: int, kind: str) -> list[ViolationRecord]:
    return [
        ViolationRecord(kind, (0, n), series[n], bound)
        for n in range(max(lo, 0), min(hi, series.trunc_order) + 1)
        if series[n] < bound
    ]


def _mismatch(got: QSeries, want: QSeries, m: int, kind: str) -> list[ViolationRecord]:
    return [
        ViolationRecord(kind, (m, n), got[n], want[n])
        for n in range(got.trunc_order + 1)
        if got[n] != want[n]
    ]
