from dataclasses import dataclass, asdict
from typing import Any

from .tables import rank_table, rank_mod_table


# exceptions to weak monotonicity away from the n = m+2 diagonal, m >= 0
WEAK_EXCEPTIONS = frozenset({(1, 7), (0, 8), (3, 11)})


@dataclass(frozen=True)
class ViolationRecord:
    """A failed inequality. For monotonicity checks the violation reads
    lhs < rhs (weak) or lhs <= rhs (strict)."""

    kind: str
    witness: tuple[int, int]
    lhs: int
    rhs: int

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["witness"] = list(self.witness)
        return d


def expected_weak_exceptions(N_max: int, m_max: int) -> set[tuple[int, int]]:
    """the exception set of weak monotonicity restricted to the window"""
    expected = {(m, m + 2) for m in range(m_max + 1) if m + 2 <= N_max}
    expected |= {(m, n) for m, n in WEAK_EXCEPTIONS if m <= m_max and n <= N_max}
    return expected


def check_weak_monotonicity(N_max: int, m_max: int) -> list[ViolationRecord]:
    if N_max < 1 or m_max < 0:
        return []
    table = rank_table(N_max)
    violations = []
    for m in range(m_max + 1):
        for n in range(1, N_max + 1):
            cur, prev = table.count(m, n), table.count(m, n - 1)
            if cur < prev:
                violations += [ViolationRecord("weak_monotonicity", (m, n), cur, prev)]
    return violations


def check_strict_monotonicity(N_max: int) -> list[ViolationRecord]:
    """N(m,n) > N(m,n-1) for m = 0, n >= 30 and m >= 1, n >= 2m + 25"""
    if N_max < 27:
        return []
    table = rank_table(N_max)
    violations = []
    m = 0
    while True:
        start = 30 if m == 0 else 2 * m + 25
        if start > N_max:
            break
        for n in range(start, N_max + 1):
            cur, prev = table.count(m, n), table.count(m, n - 1)
            if cur <= prev:
                violations += [ViolationRecord("strict_monotonicity", (m, n), cur, prev)]
        m += 1
    return violations


def check_N0_increment(N_max: int, n_min: int = 15) -> list[ViolationRecord]:
    """N(0,n) >= N(0,n-1) + 2 for n_min <= n <= N_max"""
    n_min = max(n_min, 1)
    if N_max < n_min:
        return []
    table = rank_table(N_max)
    violations = []
    for n in range(n_min, N_max + 1):
        cur, need = table.count(0, n), table.count(0, n - 1) + 2
        if cur < need:
            violations += [ViolationRecord("N0_increment", (0, n), cur, need)]
    return violations


def rank_mod_threshold(r: int, t: int) -> int:
    return max(2 * r + 25, 2 * (t - r) + 25)


def check_rank_mod_monotonicity(t: int, N_max: int) -> list[ViolationRecord]:
    table = rank_mod_table(t, N_max)
    violations = []
    for r in range(t):
        for n in range(rank_mod_threshold(r, t), N_max + 1):
            cur, prev = table.count(r, n), table.count(r, n - 1)
            if cur < prev:
                violations += [
                    ViolationRecord(f"rank_mod_monotonicity_t{t}", (r, n), cur, prev)
                ]
    return violations
