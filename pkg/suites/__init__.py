__all__ = [
    "Suite",
    "LemmaSuite",
    "MonotonicitySuite",
    "IdentitySuite",
    "TransformSuite",
    "BoundSuite",
    "EquidistributionScan",
    "A3LimitScan",
    "PhiAsymptoticScan",
    "ConvexityScan",
    "BessenrodtOnoScan",
    "make_suite",
]

from copy import deepcopy

from ranklab.errors import UsageError
from .suite import Suite
from .verify import LemmaSuite, MonotonicitySuite, IdentitySuite, TransformSuite, BoundSuite
from .scans import (
    EquidistributionScan,
    A3LimitScan,
    PhiAsymptoticScan,
    ConvexityScan,
    BessenrodtOnoScan,
)


def make_suite(cfg, kind: str, name: str) -> Suite:
    if name not in cfg.get(kind, {}):
        raise UsageError(f"no {kind} suite named '{name}' in the config")
    glob = globals()
    suite_cfg = cfg[kind][name]
    suite_cls = suite_cfg["suite_cls"]
    assert suite_cls in glob, f"'{suite_cls}' is not a valid suite."
    suite = glob[suite_cls](name=name, suite_cfg=deepcopy(suite_cfg), cfg=cfg)
    assert suite.kind == kind, f"'{suite_cls}' is not a {kind} suite."
    return suite
