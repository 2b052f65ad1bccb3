"""Transformation laws of theta, mu, h and A_l as relative residuals.

Each function evaluates both sides of one law and returns
|lhs - rhs| / max(1, |lhs|, |rhs|), so the checks read the same for
small and large values. `TRANSFORM_CHECKS` names the ones the transform
suite samples over.
"""

from functools import partial

from mpmath import mp

from .appell import appell_A, appell_A_decomposed, zwegers_mu
from .bounds import h_bound, h_bound_argument
from .mordell import mordell_h
from .precision import PrecisionSpec, QuadratureSpec, principal_sqrt_minus_i
from .theta import jacobi_theta


def relative_residual(lhs, rhs):
    return abs(lhs - rhs) / max(1, abs(lhs), abs(rhs))


def theta_shift_residual(z, tau, prec: PrecisionSpec | None = None, quad=None):
    """theta(z + 1) = -theta(z)"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        return relative_residual(jacobi_theta(z + 1, tau, prec), -jacobi_theta(z, tau, prec))


def theta_quasi_period_residual(z, tau, prec: PrecisionSpec | None = None, quad=None):
    """theta(z + tau) = -e^(-pi i tau - 2 pi i z) theta(z)"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        z, tau = mp.mpc(z), mp.mpc(tau)
        rhs = -mp.expjpi(-tau - 2 * z) * jacobi_theta(z, tau, prec)
        return relative_residual(jacobi_theta(z + tau, tau, prec), rhs)


def theta_inversion_residual(z, tau, prec: PrecisionSpec | None = None, quad=None):
    """theta(z;tau) = i/sqrt(-i tau) e^(-pi i z^2/tau) theta(z/tau; -1/tau)"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        z, tau = mp.mpc(z), mp.mpc(tau)
        rhs = 1j / principal_sqrt_minus_i(tau) * mp.expjpi(-z * z / tau)
        rhs *= jacobi_theta(z / tau, -1 / tau, prec)
        return relative_residual(jacobi_theta(z, tau, prec), rhs)


def mu_shift_residual(u, v, tau, prec: PrecisionSpec | None = None, quad=None):
    """mu(u + 1, v) = -mu(u, v)"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        return relative_residual(zwegers_mu(u + 1, v, tau, prec), -zwegers_mu(u, v, tau, prec))


def mu_inversion_residual(u, v, tau, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None):
    """mu(u,v;tau) = -1/sqrt(-i tau) e^(pi i (u-v)^2/tau) mu(u/tau, v/tau; -1/tau) + h(u-v;tau)/(2i)"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        u, v, tau = mp.mpc(u), mp.mpc(v), mp.mpc(tau)
        rhs = -mp.expjpi((u - v) ** 2 / tau) / principal_sqrt_minus_i(tau)
        rhs *= zwegers_mu(u / tau, v / tau, -1 / tau, prec)
        rhs += mordell_h(u - v, tau, prec, quad) / 2j
        return relative_residual(zwegers_mu(u, v, tau, prec), rhs)


def h_parity_residual(z, tau, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None):
    """h(-z) = h(z)"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        return relative_residual(mordell_h(-mp.mpc(z), tau, prec, quad), mordell_h(z, tau, prec, quad))


def h_inversion_residual(z, tau, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None):
    """h(z;tau) = 1/sqrt(-i tau) e^(pi i z^2/tau) h(z/tau; -1/tau)"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        z, tau = mp.mpc(z), mp.mpc(tau)
        rhs = mp.expjpi(z * z / tau) / principal_sqrt_minus_i(tau)
        rhs *= mordell_h(z / tau, -1 / tau, prec, quad)
        return relative_residual(mordell_h(z, tau, prec, quad), rhs)


def h_shift_residual(z, tau, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None):
    """h(z) + e^(-2 pi i z - pi i tau) h(z + tau) = 2 e^(-pi i z - pi i tau/4)"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        z, tau = mp.mpc(z), mp.mpc(tau)
        lhs = mordell_h(z, tau, prec, quad)
        lhs += mp.expjpi(-2 * z - tau) * mordell_h(z + tau, tau, prec, quad)
        return relative_residual(lhs, 2 * mp.expjpi(-z - tau / 4))


def h_mu_cross_residual(u, v, tau, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None):
    """mordell_h(u - v) against h rebuilt from the mu inversion law with
    Appell sums only"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        u, v, tau = mp.mpc(u), mp.mpc(v), mp.mpc(tau)
        rebuilt = zwegers_mu(u, v, tau, prec)
        rebuilt += mp.expjpi((u - v) ** 2 / tau) / principal_sqrt_minus_i(tau) * zwegers_mu(
            u / tau, v / tau, -1 / tau, prec
        )
        return relative_residual(mordell_h(u - v, tau, prec, quad), 2j * rebuilt)


def appell_decomposition_residual(level: int, u, v, tau, prec: PrecisionSpec | None = None, quad=None):
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        return relative_residual(
            appell_A(level, u, v, tau, prec), appell_A_decomposed(level, u, v, tau, prec)
        )


def h_bound_margin(kappa: int, alpha, beta, z, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None):
    """h_bound minus the true |h| at the covered point; negative means the
    bound failed"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        zh, tauh = h_bound_argument(kappa, alpha, beta, z, prec.digits)
        return h_bound(kappa, alpha, beta, z, prec.digits) - abs(mordell_h(zh, tauh, prec, quad))


# name -> (arguments drawn from a TransformSample, residual function)
TRANSFORM_CHECKS = {
    "theta_shift": (("z", "tau"), theta_shift_residual),
    "theta_quasi_period": (("z", "tau"), theta_quasi_period_residual),
    "theta_inversion": (("z", "tau"), theta_inversion_residual),
    "mu_shift": (("u", "v", "tau"), mu_shift_residual),
    "mu_inversion": (("u", "v", "tau"), mu_inversion_residual),
    "h_parity": (("z", "tau"), h_parity_residual),
    "h_inversion": (("z", "tau"), h_inversion_residual),
    "h_shift": (("z", "tau"), h_shift_residual),
    "h_mu_cross": (("u", "v", "tau"), h_mu_cross_residual),
    "appell_level_1": (("u", "v", "tau"), partial(appell_decomposition_residual, 1)),
    "appell_level_2": (("u", "v", "tau"), partial(appell_decomposition_residual, 2)),
    "appell_level_3": (("u", "v", "tau"), partial(appell_decomposition_residual, 3)),
}
