__all__ = [
    "partition_count",
    "partition_numbers",
    "brute_force_rank_histogram",
    "partitions_desc",
    "rank",
    "ORACLE_LIMIT",
    "RankTable",
    "RankModTable",
    "rank_generating_function",
    "rank_table",
    "rank_mod_table",
    "ViolationRecord",
    "WEAK_EXCEPTIONS",
    "expected_weak_exceptions",
    "check_weak_monotonicity",
    "check_strict_monotonicity",
    "check_N0_increment",
    "check_rank_mod_monotonicity",
    "rank_mod_threshold",
    "verify_lemma_postage",
    "verify_lemma_nonneg",
    "verify_lemma_fmk",
    "verify_fmk_decomposition",
    "verify_gap_positivity",
    "verify_low_order_positivity",
    "verify_generating_identity",
    "reconstruct_rank_mod",
]

from .partitions import partition_count, partition_numbers
from .oracle import brute_force_rank_histogram, partitions_desc, rank, ORACLE_LIMIT
from .tables import (
    RankTable,
    RankModTable,
    rank_generating_function,
    rank_table,
    rank_mod_table,
)
from .checks import (
    ViolationRecord,
    WEAK_EXCEPTIONS,
    expected_weak_exceptions,
    check_weak_monotonicity,
    check_strict_monotonicity,
    check_N0_increment,
    check_rank_mod_monotonicity,
    rank_mod_threshold,
)
from .lemmas import (
    verify_lemma_postage,
    verify_lemma_nonneg,
    verify_lemma_fmk,
    verify_fmk_decomposition,
    verify_gap_positivity,
    verify_low_order_positivity,
)
from .identities import verify_generating_identity, reconstruct_rank_mod
