"""Report records shared by the verification suites and scans, and their
JSON/CSV writers. Output is deterministic: keys sorted, numbers from mpmath
rendered with a fixed digit count, LF line endings."""

import csv
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

import numpy as np
from mpmath import mp

from ranklab import __version__


# digits kept when an mpmath number is written to a report
REPORT_DIGITS = 15

PASS = "pass"
FAIL = "fail"
NOT_FOUND = "not-found"


@dataclass
class CheckReport:
    check: str
    params: dict[str, Any]
    status: str
    violations: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        return jsonable(
            {
                "check": self.check,
                "params": self.params,
                "status": self.status,
                "violations": self.violations,
                "details": self.details,
            }
        )


@dataclass
class ScanReport:
    check: str
    params: dict[str, Any]
    grid: list[Any]
    values: list[Any]
    gate: dict[str, Any]
    status: str
    witnesses: list[Any] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        return jsonable(
            {
                "check": self.check,
                "params": self.params,
                "grid": self.grid,
                "values": self.values,
                "gate": self.gate,
                "status": self.status,
                "witnesses": self.witnesses,
            }
        )


def jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (mp.mpf, mp.mpc)):
        return mp.nstr(obj, REPORT_DIGITS)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, complex):
        return repr(obj)
    return obj


def report_document(
    reports: Iterable[CheckReport | ScanReport], config: dict[str, Any]
) -> dict[str, Any]:
    """wraps reports with the library version and the resolved config"""
    reports = list(reports)
    return {
        "version": __version__,
        "config": jsonable(config),
        "status": PASS if all(r.passed for r in reports) else FAIL,
        "reports": [r.to_dict() for r in reports],
    }


def dumps(document: dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def write_json(document: dict[str, Any], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fp:
        fp.write(dumps(document))


def write_csv(header: list[str], rows: Iterable[Iterable[Any]], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fp:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(jsonable(list(row)))
