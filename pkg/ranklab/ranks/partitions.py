from functools import lru_cache

from ranklab.errors import DomainError


@lru_cache(maxsize=8)
def partition_numbers(n_max: int) -> tuple[int, ...]:
    """p(0), ..., p(n_max) from Euler's pentagonal number recurrence"""
    if n_max < 0:
        raise DomainError(f"n must be non-negative, got {n_max}")

    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return tuple(p)


def partition_count(n: int) -> int:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return partition_numbers(n)[n]
