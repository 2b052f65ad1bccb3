from fractions import Fraction

from mpmath import mp

from ranklab.errors import IdentityMismatchError, RanklabError
from ranklab.ranks import (
    check_weak_monotonicity,
    check_strict_monotonicity,
    check_N0_increment,
    check_rank_mod_monotonicity,
    expected_weak_exceptions,
    verify_generating_identity,
)
from ranklab.ranks.lemmas import (
    lemma_postage_violations,
    lemma_nonneg_violations,
    lemma_fmk_violations,
    fmk_decomposition_violations,
    gap_positivity_violations,
    low_order_positivity_violations,
)
from ranklab.reports import CheckReport
from ranklab.special import (
    TRANSFORM_CHECKS,
    bound_samples,
    h_bound_margin,
    rank_series_value,
    rank_to_appell,
    transform_samples,
)
from .suite import Suite, check_report, as_list


class LemmaSuite(Suite):
    """exact coefficient lemmas: one-variable checks to `N_max`, two-variable
    checks to `N_two_variable`"""

    def _run(self) -> list[CheckReport]:
        N = self.suite_cfg["N_max"]
        N2 = self.suite_cfg["N_two_variable"]
        m_band = self.suite_cfg["m_band"]
        low = self.suite_cfg["low_order_N_max"]

        print(f"Expanding one-variable series to q^{N}.", flush=True)
        nonneg = []
        for m in range(1, self.suite_cfg["nonneg_m_max"] + 1):
            nonneg += lemma_nonneg_violations(m, N)

        print(f"Expanding two-variable series to q^{N2}.", flush=True)
        return [
            check_report("lemma_postage", {"N_max": N}, lemma_postage_violations(N)),
            check_report(
                "lemma_nonneg", {"N_max": N, "m_max": self.suite_cfg["nonneg_m_max"]}, nonneg
            ),
            check_report(
                "lemma_fmk", {"N_max": N2, "m_band": m_band}, lemma_fmk_violations(N2, m_band)
            ),
            check_report(
                "fmk_decomposition",
                {"N_max": N2, "m_band": m_band},
                fmk_decomposition_violations(N2, m_band),
            ),
            check_report("gap_positivity", {"N_max": N}, gap_positivity_violations(N)),
            check_report(
                "low_order_positivity",
                {"N_max": low, "m_max": (low - 25) // 2},
                low_order_positivity_violations(low, (low - 25) // 2),
            ),
        ]


class MonotonicitySuite(Suite):
    def _run(self) -> list[CheckReport]:
        N, m_max = self.suite_cfg["N_max"], self.suite_cfg["m_max"]
        strict_N = self.suite_cfg["strict_N_max"]
        print(f"Building rank table to n={max(N, strict_N)}.", flush=True)

        # weak monotonicity passes iff the exception set is exactly the expected one
        found = {v.witness for v in check_weak_monotonicity(N, m_max)}
        expected = expected_weak_exceptions(N, m_max)
        mismatches = [
            {"witness": list(w), "found": w in found, "expected": w in expected}
            for w in sorted(found ^ expected)
        ]
        weak = check_report(
            "weak_monotonicity",
            {"N_max": N, "m_max": m_max},
            mismatches,
            {"exceptions": [list(w) for w in sorted(found)]},
        )

        rank_mod = []
        for t in range(2, self.suite_cfg["t_max"] + 1):
            rank_mod += check_rank_mod_monotonicity(t, strict_N)

        return [
            weak,
            check_report(
                "strict_monotonicity", {"N_max": strict_N}, check_strict_monotonicity(strict_N)
            ),
            check_report(
                "N0_increment",
                {"N_max": strict_N, "n_min": self.suite_cfg["n0_min"]},
                check_N0_increment(strict_N, self.suite_cfg["n0_min"]),
            ),
            check_report(
                "rank_mod_monotonicity",
                {"N_max": strict_N, "t_max": self.suite_cfg["t_max"]},
                rank_mod,
            ),
        ]


class IdentitySuite(Suite):
    """the generating-function identity for N(r,t;n) in both forms, and the
    Appell rewrite of R against the truncated exact series"""

    def _run(self) -> list[CheckReport]:
        prec = self.precision()
        N, tol = self.suite_cfg["N_max"], self.suite_cfg["tol"]
        reports = []
        for form in as_list(self.suite_cfg["forms"]):
            violations = []
            deviations = {}
            for t in as_list(self.suite_cfg["t"]):
                try:
                    dev = verify_generating_identity(t, N, tol, form, prec.digits)
                except IdentityMismatchError as e:
                    dev = e.deviation
                    violations += [e.witness | {"deviation": e.deviation}]
                deviations[str(t)] = dev
            reports += [
                check_report(
                    f"generating_identity_{form}",
                    {"t": as_list(self.suite_cfg["t"]), "N_max": N, "tol": tol},
                    violations,
                    {"max_deviation": deviations},
                )
            ]

        tau = complex(self.suite_cfg["tau"])
        N_series, tol = self.suite_cfg["series_N_max"], self.suite_cfg["appell_tol"]
        violations = []
        values = {}
        with mp.workdps(prec.digits):
            for z in as_list(self.suite_cfg["z"]):
                zf = float(Fraction(str(z)))
                rhs = rank_to_appell(zf, tau, prec)
                lhs, tail = rank_series_value(zf, tau, N_series, prec)
                dev = abs(lhs - rhs)
                values[str(z)] = {"deviation": dev, "tail_bound": tail}
                if dev >= tol or tail >= tol:
                    violations += [{"z": str(z), "deviation": dev, "tail_bound": tail}]
        reports += [
            check_report(
                "rank_to_appell",
                {"z": [str(z) for z in as_list(self.suite_cfg["z"])], "N_max": N_series, "tol": tol},
                violations,
                values,
            )
        ]
        return reports


def _transform_residual(name: str, sample, prec, quad) -> tuple:
    keys, fn = TRANSFORM_CHECKS[name]
    try:
        return fn(*(getattr(sample, k) for k in keys), prec, quad), None
    except RanklabError as e:
        return None, f"{type(e).__name__}: {e}"


class TransformSuite(Suite):
    """transformation laws at seeded sample points; each law passes when
    every residual lies below `tol`"""

    def _run(self) -> list[CheckReport]:
        prec = self.precision()
        n, seed, tol = self.suite_cfg["samples"], self.suite_cfg["seed"], self.suite_cfg["tol"]
        samples = transform_samples(n, seed)
        names = as_list(self.suite_cfg.get("checks") or list(TRANSFORM_CHECKS))

        reports = []
        for name in names:
            results = self._map(
                _transform_residual, [(name, s, prec, self.quad) for s in samples], name
            )
            violations = []
            worst = mp.mpf(0)
            for i, (residual, error) in enumerate(results):
                if error is not None or residual >= tol:
                    violations += [
                        {"sample": i, "point": samples[i].to_dict(), "residual": residual, "error": error}
                    ]
                elif residual > worst:
                    worst = residual
            reports += [
                check_report(
                    name,
                    {"samples": n, "seed": seed, "tol": tol},
                    violations,
                    {"max_residual": worst},
                )
            ]
        return reports


def _bound_margin(sample, prec, quad) -> tuple:
    try:
        return h_bound_margin(sample.kappa, sample.alpha, sample.beta, sample.z, prec, quad), None
    except RanklabError as e:
        return None, f"{type(e).__name__}: {e}"


class BoundSuite(Suite):
    """the bound on |h| against the quadrature value at seeded admissible
    parameters"""

    def _run(self) -> list[CheckReport]:
        prec = self.precision()
        n, seed = self.suite_cfg["samples"], self.suite_cfg["seed"]
        samples = bound_samples(n, seed)
        results = self._map(_bound_margin, [(s, prec, self.quad) for s in samples], "h_bound")

        violations = []
        margins = [m for m, _ in results if m is not None]
        for i, (margin, error) in enumerate(results):
            if error is not None or margin < 0:
                violations += [
                    {"sample": i, "point": samples[i].to_dict(), "margin": margin, "error": error}
                ]
        return [
            check_report(
                "h_bound",
                {"samples": n, "seed": seed},
                violations,
                {"min_margin": min(margins) if margins else None},
            )
        ]
