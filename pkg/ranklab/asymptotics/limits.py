"""Small-eps behaviour at tau = i eps / (2 pi): A_3(u, -tau; tau) -> 0 and the
eta-type asymptotic of 1/phi."""

from mpmath import mp

from ranklab.errors import DomainError
from ranklab.reports import ScanReport, PASS, FAIL
from ranklab.special import (
    HalfPlanePoint,
    PrecisionSpec,
    QuadratureSpec,
    appell_A,
    appell_A3_S1S2,
    euler_phi,
    s2_bound,
)


def a3_limit_scan(
    u,
    eps_list: list[float],
    prec: PrecisionSpec | None = None,
    limit_tol: float = 1e-3,
    split: bool = False,
    quad: QuadratureSpec | None = None,
) -> ScanReport:
    """|A_3(u, -tau; tau)| along a decreasing eps grid.

    Passes when every value is finite, the profile decreases and the last
    value is below `limit_tol`. The bound on the h-part of S2 is reported
    alongside; with `split=True` S1 and S2 are also evaluated through the
    Mordell integral and their sum is checked against the direct series.
    """
    if not 0 < u <= 0.5:
        raise DomainError(f"u must lie in (0, 1/2], got {u}")
    if not eps_list:
        raise DomainError("eps_list must not be empty")
    if any(a <= b for a, b in zip(eps_list, eps_list[1:])):
        raise DomainError("eps_list must be strictly decreasing")
    prec = prec or PrecisionSpec.default(min(eps_list))
    prec.check_eps(min(eps_list))

    values = []
    witnesses = []
    with mp.workdps(prec.digits):
        for eps in eps_list:
            point = HalfPlanePoint.from_eps(eps, u=u, prec=prec)
            tau = point.tau
            a3 = appell_A(3, u, point.v, tau, prec)
            entry = {"eps": eps, "abs_a3": abs(a3), "s2_bound": s2_bound(u, eps, prec.digits)}
            if split:
                parts = appell_A3_S1S2(u, tau, prec, quad)
                entry |= {
                    "abs_s1": abs(parts.s1),
                    "abs_s2": abs(parts.s2),
                    "split_residual": abs(parts.total - a3),
                    "route": parts.route,
                }
            values += [abs(a3)]
            witnesses += [entry]

        finite = all(mp.isfinite(v) for v in values)
        decreasing = all(a > b for a, b in zip(values, values[1:]))
        status = PASS if finite and decreasing and values[-1] < limit_tol else FAIL

    return ScanReport(
        check="a3_limit",
        params={"u": u, "eps_list": list(eps_list), "digits": prec.digits, "split": split},
        grid=list(eps_list),
        values=values,
        gate={"final_below": limit_tol, "decreasing": True},
        status=status,
        witnesses=witnesses,
    )


def phi_ratio(eps, prec: PrecisionSpec | None = None):
    """(1/phi(i eps/(2 pi))) / (sqrt(eps/(2 pi)) e^(pi^2/(6 eps)))"""
    prec = prec or PrecisionSpec.default(eps)
    with mp.workdps(prec.digits):
        tau = HalfPlanePoint.from_eps(eps, prec=prec).tau
        eps = mp.mpf(eps)
        leading = mp.sqrt(eps / (2 * mp.pi)) * mp.exp(mp.pi**2 / (6 * eps))
        return (1 / euler_phi(tau, prec)).real / leading


def phi_asymptotic_check(
    eps_list: list[float], prec: PrecisionSpec | None = None, gate: float | None = None
) -> ScanReport:
    """Ratio of 1/phi to its leading behaviour along a decreasing eps grid;
    passes when |ratio - 1| shrinks at every step (and ends below `gate`)."""
    if not eps_list:
        raise DomainError("eps_list must not be empty")
    if any(a <= b for a, b in zip(eps_list, eps_list[1:])):
        raise DomainError("eps_list must be strictly decreasing")
    prec = prec or PrecisionSpec.default(min(eps_list))
    prec.check_eps(min(eps_list))

    with mp.workdps(prec.digits):
        ratios = [phi_ratio(eps, prec) for eps in eps_list]
        errors = [abs(r - 1) for r in ratios]
        improving = all(a > b for a, b in zip(errors, errors[1:]))
        gated = gate is None or errors[-1] < gate

    return ScanReport(
        check="phi_asymptotic",
        params={"eps_list": list(eps_list), "digits": prec.digits},
        grid=list(eps_list),
        values=ratios,
        gate={"final_within": gate, "improving": True},
        status=PASS if improving and gated else FAIL,
        witnesses=[{"eps": e, "ratio": r} for e, r in zip(eps_list, ratios)],
    )
