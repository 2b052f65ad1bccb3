from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ranklab.errors import DomainError
from ranklab.series import ZQSeries


@lru_cache(maxsize=4)
def rank_generating_function(n_max: int) -> ZQSeries:
    """R(z;q) = sum_k q^(k^2) / ((zq;q)_k (q/z;q)_k), truncated at q^n_max.

    The running product is re-truncated to order n_max - k^2 before each
    division, since only that many of its coefficients survive the q^(k^2)
    shift.
    """
    if n_max < 0:
        raise DomainError(f"N_max must be non-negative, got {n_max}")

    total = ZQSeries.one(n_max)
    prod = ZQSeries.one(n_max)
    k = 1
    while k * k <= n_max:
        order = n_max - k * k
        prod = prod.truncate(order).divide_by_factor(1, k).divide_by_factor(-1, k)
        total = total + prod.q_shift(k * k)
        k += 1
    return total


@dataclass(frozen=True, eq=False)
class RankTable:
    """N(m,n) for 0 <= m <= n <= N_max; negative m by symmetry.
    `entries[n, m]` holds N(m,n)."""

    N_max: int
    entries: np.ndarray

    def count(self, m: int, n: int) -> int:
        if not 0 <= n <= self.N_max:
            raise IndexError(f"n={n} outside 0..{self.N_max}")
        m = abs(m)
        if m > n:
            return 0
        return self.entries[n, m]

    def histogram(self, n: int) -> dict[int, int]:
        """rank -> count over all partitions of n, nonzero entries only"""
        hist = {}
        for m in range(-n, n + 1):
            c = self.count(m, n)
            if c:
                hist[m] = c
        return hist

    def row_total(self, n: int) -> int:
        return sum(self.count(m, n) for m in range(-n, n + 1))

    def fold(self, t: int) -> "RankModTable":
        if t < 1:
            raise DomainError(f"modulus must be >= 1, got {t}")
        entries = np.empty((self.N_max + 1, t), dtype=object)
        entries.fill(0)
        for n in range(self.N_max + 1):
            for m in range(-n, n + 1):
                entries[n, m % t] += self.count(m, n)
        entries.flags.writeable = False
        return RankModTable(t=t, N_max=self.N_max, entries=entries)

    CSV_HEADER = ("n", "m", "count")

    def csv_rows(self) -> list[tuple[int, int, int]]:
        """(n, m, N(m,n)) for every rank -n <= m <= n"""
        return [
            (n, m, self.count(m, n))
            for n in range(self.N_max + 1)
            for m in range(-n, n + 1)
        ]


@dataclass(frozen=True, eq=False)
class RankModTable:
    """N(r,t;n) for 0 <= r < t, 0 <= n <= N_max; `entries[n, r]`"""

    t: int
    N_max: int
    entries: np.ndarray

    def count(self, r: int, n: int) -> int:
        if not 0 <= n <= self.N_max:
            raise IndexError(f"n={n} outside 0..{self.N_max}")
        return self.entries[n, r % self.t]

    CSV_HEADER = ("n", "r", "count")

    def csv_rows(self) -> list[tuple[int, int, int]]:
        return [
            (n, r, self.entries[n, r])
            for n in range(self.N_max + 1)
            for r in range(self.t)
        ]


@lru_cache(maxsize=4)
def rank_table(N_max: int) -> RankTable:
    R = rank_generating_function(N_max)
    entries = np.empty((N_max + 1, N_max + 1), dtype=object)
    entries.fill(0)
    for n in range(N_max + 1):
        for m in range(n + 1):
            entries[n, m] = R.coeff(m, n)
    entries.flags.writeable = False
    return RankTable(N_max=N_max, entries=entries)


def rank_mod_table(t: int, N_max: int) -> RankModTable:
    if t < 1:
        raise DomainError(f"modulus must be >= 1, got {t}")
    return rank_table(N_max).fold(t)
