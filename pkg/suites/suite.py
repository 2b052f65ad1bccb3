from abc import ABC, abstractmethod
from typing import Any
import os.path as osp
import pathlib

from joblib import Parallel, delayed
from tqdm import tqdm

from ranklab.reports import CheckReport, ScanReport, report_document, write_json, PASS, FAIL
from ranklab.special import PrecisionSpec, QuadratureSpec


CfgType = dict[str, Any]

ReportType = CheckReport | ScanReport


class Suite(ABC):
    """Base class of every verification suite and scan. Each suite must
    implement `_run`, which returns its reports; `run` writes them as one
    JSON document embedding the library version and resolved config.
    """

    # "verify" or "scan", names the config section the suite lives in
    kind: str = "verify"

    def __init__(self, name: str, suite_cfg: CfgType, cfg: CfgType) -> None:
        self.name = name
        self.suite_cfg = suite_cfg
        self.cfg = cfg

        self.precision_cfg: CfgType = {
            k: v for k, v in cfg.get("precision", {}).items() if v is not None
        }
        self.quad = QuadratureSpec(**cfg.get("quadrature", {}))

        self.n_jobs: int = cfg.get("parallel", {}).get("n_jobs", 1)
        self.quiet: bool = cfg.get("quiet", False)

        self.artifacts_dir: str = cfg["output"]["artifacts_dir"]
        self.output: str = suite_cfg.get("output") or osp.join(
            self.artifacts_dir, f"{self.kind}_{self.name}.json"
        )

    def run(self) -> bool:
        """runs the suite, writes its report and returns whether it passed"""
        print(f"Running {self.kind} suite '{self.name}'.", flush=True)
        reports = self._run()

        document = report_document(reports, self.cfg)
        pathlib.Path(osp.dirname(self.output) or ".").mkdir(parents=True, exist_ok=True)
        write_json(document, self.output)

        for report in reports:
            print(f"  {report.check}: {report.status}", flush=True)
        print(
            f"Suite '{self.name}' complete ({document['status']}); report at {self.output}",
            flush=True,
        )
        return document["status"] == PASS

    @abstractmethod
    def _run(self) -> list[ReportType]:
        pass

    # internal methods

    def precision(self, eps: float | None = None) -> PrecisionSpec:
        return PrecisionSpec.default(eps, **self.precision_cfg)

    def _map(self, fn, jobs: list[tuple], desc: str) -> list:
        """evaluates fn over the argument tuples, in submission order"""
        jobs = tqdm(jobs, desc=desc, disable=self.quiet, leave=False)
        if self.n_jobs == 1:
            return [fn(*args) for args in jobs]
        return Parallel(n_jobs=self.n_jobs)(delayed(fn)(*args) for args in jobs)


def check_report(
    check: str, params: CfgType, violations: list, details: CfgType | None = None
) -> CheckReport:
    """a CheckReport that passes iff there are no violations"""
    return CheckReport(
        check=check,
        params=params,
        status=FAIL if violations else PASS,
        violations=[v.to_dict() if hasattr(v, "to_dict") else v for v in violations],
        details=details or {},
    )


def as_list(value) -> list:
    return list(value) if isinstance(value, (list, tuple)) else [value]
