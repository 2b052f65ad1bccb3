from collections import Counter
from collections.abc import Iterator

from ranklab.errors import DomainError, OracleLimitError


ORACLE_LIMIT = 60


def partitions_desc(n: int) -> Iterator[tuple[int, ...]]:
    """Yields the partitions of n in decreasing lexicographic order, parts
    non-increasing: (n), (n-1, 1), (n-2, 2), ..."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n == 0:
        yield ()
        return

    parts = [n]
    while True:
        yield tuple(parts)

        # strip trailing ones, then lower the rightmost part > 1 and refill
        # greedily with the released amount
        rem = 0
        while parts and parts[-1] == 1:
            parts.pop()
            rem += 1
        if not parts:
            return
        x = parts.pop()
        rem += x
        x -= 1
        while rem > x:
            parts.append(x)
            rem -= x
        parts.append(rem)


def rank(partition: tuple[int, ...]) -> int:
    """largest part minus number of parts (0 for the empty partition)"""
    if not partition:
        return 0
    return partition[0] - len(partition)


def brute_force_rank_histogram(n: int, limit: int = ORACLE_LIMIT) -> dict[int, int]:
    if n > limit:
        raise OracleLimitError(n, limit)
    return dict(Counter(rank(lam) for lam in partitions_desc(n)))
