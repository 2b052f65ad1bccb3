"""A_3(u, v; tau) near tau = 0, split into a mu-part S1 and an h-part S2.

Both parts come from inverting the level-one pieces of A_3 at -1/(3 tau).
S1 stays bounded as tau -> 0 while S2 is controlled by the Mordell integral,
so the split is what the small-eps scans evaluate.
"""

from dataclasses import dataclass

from mpmath import mp

from ranklab.errors import DomainError
from .appell import appell_A, appell_one
from .bounds import h_bound
from .mordell import mordell_h
from .precision import PrecisionSpec, QuadratureSpec
from .theta import jacobi_theta


@dataclass(frozen=True)
class A3Split:
    s1: object
    s2: object
    # "theta_mu" away from u = 1/3, "collapsed" inside the singularity guard
    route: str

    @property
    def total(self):
        return self.s1 + self.s2


def appell_A3_split(
    u, v, tau, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None
) -> A3Split:
    """S1 and S2 at a general v, with k = 0, 1, 2:

        S1 = 1/(3 tau) e^(pi i u (3u - 2v)/tau) sum_k A_1(u/tau, v/(3 tau) + k/3; -1/(3 tau))
        S2 = sum_k e^(2 pi i u k) / (2 sqrt(-3 i tau)) e^(-pi i (v + k tau)^2 / (3 tau))
                   theta(v/(3 tau) + k/3; -1/(3 tau)) h(3u - v - k tau; 3 tau)
    """
    prec = prec or PrecisionSpec.default()
    return A3Split(_s1_theta_mu(u, v, tau, prec), _s2_direct(u, v, tau, prec, quad), "theta_mu")


def appell_A3_S1S2(
    u, tau, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None
) -> A3Split:
    """The split at v = -tau for 0 < u <= 1/2 and tau on the imaginary axis.

    Each k-term of S1 has a pole at u = 1/3 that cancels in the sum; within
    `singularity_guard` of it S1 is taken from the collapsed series instead.
    """
    prec = prec or PrecisionSpec.default()
    u = _check_u(u)
    _check_imaginary(tau)
    with mp.workdps(prec.digits):
        tau = mp.mpc(tau)
        s2 = _s2_direct(u, -tau, tau, prec, quad)
        if abs(u - mp.mpf(1) / 3) < prec.singularity_guard:
            return A3Split(a3_collapsed_s1(u, tau, prec), s2, "collapsed")
        return A3Split(_s1_theta_mu(u, -tau, tau, prec), s2, "theta_mu")


def a3_collapsed_s1(u, tau, prec: PrecisionSpec | None = None):
    """S1 at v = -tau with the sum over k carried out.

    Only every third term of the level-one sums survives, which leaves
    1/tau e^(2 pi i u) q0^((2u - 3u^2)/2) A_3(u/tau, 1/tau; -1/tau)
    with q0 = e^(-2 pi i/tau). Its denominators 1 - q0^(m-u) stay away from
    zero at u = 1/3.
    """
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        u, tau = mp.mpc(u), mp.mpc(tau)
        prefactor = mp.expjpi(2 * u - (2 * u - 3 * u * u) / tau) / tau
        return prefactor * appell_A(3, u / tau, 1 / tau, -1 / tau, prec)


def s2_inverted(u, tau, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None):
    """S2 at v = -tau with each h inverted to -1/(3 tau):

        i/(6 tau) e^(pi i (2u + 3u^2/tau)) sum_k theta((k-1)/3; -1/(3 tau)) h(u/tau + (1-k)/3; -1/(3 tau))
    """
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        u, tau = mp.mpc(u), mp.mpc(tau)
        inv = -1 / (3 * tau)
        total = mp.mpc(0)
        for k in (0, 2):
            z = u / tau + mp.mpf(1 - k) / 3
            total += jacobi_theta(mp.mpf(k - 1) / 3, inv, prec) * mordell_h(z, inv, prec, quad)
        return 1j / (6 * tau) * mp.expjpi(2 * u + 3 * u * u / tau) * total


def s2_parts(u, tau, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None) -> tuple:
    """(S2_1, S2_2) with S2_1 + S2_2 = S2.

    Shifting each inverted h by -1/(3 tau) splits off the closed piece

        S2_2 = i/(3 tau) e^(2 pi i u) q0^(-3u^2/2 + u/2 - 1/24) sum_k theta((k-1)/3; -1/(3 tau)) e^(pi i (k-1)/3)

    and leaves S2_1, which carries h((3u-1)/(3 tau) + (1-k)/3; -1/(3 tau)).
    """
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        u, tau = mp.mpc(u), mp.mpc(tau)
        inv = -1 / (3 * tau)
        closed = mp.mpc(0)
        rest = mp.mpc(0)
        for k in (0, 2):
            th = jacobi_theta(mp.mpf(k - 1) / 3, inv, prec)
            z = u / tau + mp.mpf(1 - k) / 3
            closed += th * mp.expjpi(mp.mpf(k - 1) / 3)
            rest -= th * mp.expjpi(-2 * z - inv) * mordell_h(z + inv, inv, prec, quad)
        # q0^x = e^(-2 pi i x / tau)
        s22 = 1j / (3 * tau) * mp.expjpi(2 * u - 2 * (-3 * u * u / 2 + u / 2 - mp.mpf(1) / 24) / tau) * closed
        s21 = 1j / (6 * tau) * mp.expjpi(2 * u + 3 * u * u / tau) * rest
        return s21, s22


def s2_bound(u, eps, digits: int = 30):
    """Upper bound on |S2| for u <= 1/6 and on |S2_1| for u > 1/6, at tau = i eps/(2 pi).

    Each inverted h is bounded with h_bound at kappa = 1, z = 3 eps/(2 pi),
    alpha = (1-k)/3 and beta = -3u (resp. 1 - 3u after the shift). The
    exponential growth of the prefactors cancels against the bound.
    """
    u = _check_u(u)
    with mp.workdps(digits):
        eps = mp.mpf(eps)
        if not eps > 0:
            raise DomainError(f"eps must be positive, got {eps}")
        prec = PrecisionSpec.default(digits=digits)
        tau = mp.mpc(0, eps / (2 * mp.pi))
        inv = -1 / (3 * tau)
        z = 3 * eps / (2 * mp.pi)
        shifted = u > mp.mpf(1) / 6
        beta = 1 - 3 * u if shifted else -3 * u

        total = mp.mpf(0)
        for k in (0, 2):
            alpha = mp.mpf(1 - k) / 3
            term = abs(jacobi_theta(mp.mpf(k - 1) / 3, inv, prec)) * h_bound(1, alpha, beta, z, digits)
            if shifted:
                term *= abs(mp.expjpi(-2 * (u / tau + alpha) - inv))
            total += term
        return abs(mp.expjpi(2 * u + 3 * u * u / tau)) * total / (6 * abs(tau))


def _s1_theta_mu(u, v, tau, prec: PrecisionSpec):
    with mp.workdps(prec.digits):
        u, v, tau = mp.mpc(u), mp.mpc(v), mp.mpc(tau)
        inv = -1 / (3 * tau)
        total = mp.mpc(0)
        for k in range(3):
            total += appell_one(u / tau, v / (3 * tau) + mp.mpf(k) / 3, inv, prec)
        return mp.expjpi(u * (3 * u - 2 * v) / tau) / (3 * tau) * total


def _s2_direct(u, v, tau, prec: PrecisionSpec, quad: QuadratureSpec | None):
    with mp.workdps(prec.digits):
        u, v, tau = mp.mpc(u), mp.mpc(v), mp.mpc(tau)
        inv = -1 / (3 * tau)
        total = mp.mpc(0)
        for k in range(3):
            th = jacobi_theta(v / (3 * tau) + mp.mpf(k) / 3, inv, prec)
            # theta(0) at v = -tau, k = 1
            if abs(th) < prec.series_tail_tol:
                continue
            weight = mp.expjpi(2 * u * k - (v + k * tau) ** 2 / (3 * tau))
            total += weight * th * mordell_h(3 * u - v - k * tau, 3 * tau, prec, quad)
        return total / (2 * mp.sqrt(-3j * tau))


def _check_u(u):
    u = mp.mpmathify(u)
    if isinstance(u, mp.mpc):
        if u.imag != 0:
            raise DomainError(f"u must be real, got {u}")
        u = u.real
    if not 0 < u <= mp.mpf(1) / 2:
        raise DomainError(f"u must lie in (0, 1/2], got {u}")
    return u


def _check_imaginary(tau) -> None:
    tau = mp.mpc(tau)
    if tau.real != 0 or not tau.imag > 0:
        raise DomainError(f"tau={tau} must lie on the positive imaginary axis")
