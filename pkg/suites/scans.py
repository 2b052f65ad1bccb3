import os.path as osp
import pathlib

from ranklab.asymptotics import (
    a3_limit_scan,
    bessenrodt_ono_check,
    convexity_ratio_profile,
    convexity_scan,
    equidistribution_report,
    phi_asymptotic_check,
)
from ranklab.reports import ScanReport, write_csv
from .suite import Suite, as_list


class ScanSuite(Suite):
    kind = "scan"


class EquidistributionScan(ScanSuite):
    def _run(self) -> list[ScanReport]:
        n_list = as_list(self.suite_cfg["n"])
        print(f"Building rank tables to n={max(n_list)}.", flush=True)
        return [
            equidistribution_report(t, n_list, self.suite_cfg.get("gate"))
            for t in as_list(self.suite_cfg["t"])
        ]


class A3LimitScan(ScanSuite):
    def _run(self) -> list[ScanReport]:
        eps_list = as_list(self.suite_cfg["eps"])
        prec = self.precision(min(eps_list))
        reports = []
        for u in as_list(self.suite_cfg["u"]):
            print(f"Scanning A_3 at u={u}.", flush=True)
            reports += [
                a3_limit_scan(
                    u,
                    eps_list,
                    prec,
                    self.suite_cfg["limit_tol"],
                    self.suite_cfg.get("split", False),
                    self.quad,
                )
            ]
        return reports


class PhiAsymptoticScan(ScanSuite):
    def _run(self) -> list[ScanReport]:
        eps_list = as_list(self.suite_cfg["eps"])
        return [phi_asymptotic_check(eps_list, self.precision(min(eps_list)), self.suite_cfg.get("gate"))]


class ConvexityScan(ScanSuite):
    """threshold scan per (r, t); with `profile` the diagonal ratio profile
    is written next to the report as CSV"""

    def _run(self) -> list[ScanReport]:
        n_cap = self.suite_cfg["n_cap"]
        reports = []
        for t in as_list(self.suite_cfg["t"]):
            residues = self.suite_cfg.get("r")
            for r in range(t) if residues is None else as_list(residues):
                reports += [convexity_scan(r, t, n_cap)]
                if self.suite_cfg.get("profile", False):
                    self._write_profile(r, t, n_cap)
        return reports

    def _write_profile(self, r: int, t: int, n_cap: int) -> None:
        path = osp.join(osp.dirname(self.output) or ".", f"convexity_profile_r{r}_t{t}.csv")
        pathlib.Path(osp.dirname(path) or ".").mkdir(parents=True, exist_ok=True)
        write_csv(["a", "exact", "asymptotic"], convexity_ratio_profile(r, t, n_cap), path)


class BessenrodtOnoScan(ScanSuite):
    def _run(self) -> list[ScanReport]:
        return [bessenrodt_ono_check(self.suite_cfg["n_cap"])]
