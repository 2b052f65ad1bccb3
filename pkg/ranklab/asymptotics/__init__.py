__all__ = [
    "TauberianTriple",
    "partition_triple",
    "hardy_ramanujan_estimate",
    "ingham_estimate",
    "rank_mod_asymptotic",
    "equidistribution_deviations",
    "equidistribution_report",
    "a3_limit_scan",
    "phi_ratio",
    "phi_asymptotic_check",
    "convexity_violations",
    "convexity_scan",
    "convexity_ratio_profile",
    "bessenrodt_ono_check",
]

from .tauberian import (
    TauberianTriple,
    partition_triple,
    hardy_ramanujan_estimate,
    ingham_estimate,
    rank_mod_asymptotic,
)
from .equidistribution import equidistribution_deviations, equidistribution_report
from .limits import a3_limit_scan, phi_ratio, phi_asymptotic_check
from .convexity import (
    convexity_violations,
    convexity_scan,
    convexity_ratio_profile,
    bessenrodt_ono_check,
)
