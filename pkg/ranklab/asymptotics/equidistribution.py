from fractions import Fraction

from ranklab.errors import DomainError
from ranklab.ranks import partition_numbers, rank_mod_table
from ranklab.reports import ScanReport, PASS, FAIL


def equidistribution_deviations(t: int, n: int, N_max: int | None = None) -> list[Fraction]:
    """signed t N(r,t;n)/p(n) - 1 for r = 0..t-1, exact; they sum to zero"""
    if t < 1:
        raise DomainError(f"modulus must be >= 1, got {t}")
    table = rank_mod_table(t, N_max or n)
    p = partition_numbers(n)[n]
    return [Fraction(t * table.count(r, n), p) - 1 for r in range(t)]


def equidistribution_report(t: int, n_list: list[int], gate: float | None = None) -> ScanReport:
    """Max over r of |t N(r,t;n)/p(n) - 1| for each n, from exact tables.

    Passes when the deviations weakly decrease along increasing n and, if a
    gate is given, the deviation at the largest n lies below it.
    """
    if not n_list:
        raise DomainError("n_list must not be empty")
    if any(n < 1 for n in n_list):
        raise DomainError(f"n must be >= 1, got {min(n_list)}")
    grid = sorted(set(n_list))
    N_max = grid[-1]

    values = []
    witnesses = []
    for n in grid:
        devs = equidistribution_deviations(t, n, N_max)
        worst = max(range(t), key=lambda r: abs(devs[r]))
        values += [float(abs(devs[worst]))]
        witnesses += [{"n": n, "r": worst, "deviation": devs[worst]}]

    monotone = all(a >= b for a, b in zip(values, values[1:]))
    gated = gate is None or values[-1] < gate
    return ScanReport(
        check="equidistribution",
        params={"t": t, "n_list": grid},
        grid=grid,
        values=values,
        gate={"final_below": gate, "weakly_decreasing": True},
        status=PASS if monotone and gated else FAIL,
        witnesses=witnesses,
    )
