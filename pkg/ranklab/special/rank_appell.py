from mpmath import mp

from ranklab.errors import DomainError, PrecisionError
from ranklab.ranks import rank_table
from .appell import appell_A
from .precision import PrecisionSpec


def euler_phi(tau, prec: PrecisionSpec | None = None):
    """phi(q) = prod_{n>=1} (1 - q^n) at q = e^(2 pi i tau).

    Stops once |q|^n / (1 - |q|) falls below the tail tolerance, which bounds
    the log of the dropped factors.
    """
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        tau = mp.mpc(tau)
        if not tau.imag > 0:
            raise DomainError(f"tau={tau} is not in the upper half-plane")
        q = mp.expjpi(2 * tau)
        r = abs(q)
        out = mp.mpc(1)
        n = 1
        while 2 * r**n / (1 - r) >= prec.series_tail_tol:
            out *= 1 - q**n
            n += 1
        return out


def rank_to_appell(z, tau, prec: PrecisionSpec | None = None):
    """R(e^(2 pi i z); q) = (e^(-3 pi i z) - e^(-pi i z)) A_3(z, -tau; tau) / phi(q)"""
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        z, tau = mp.mpc(z), mp.mpc(tau)
        prefactor = mp.expjpi(-3 * z) - mp.expjpi(-z)
        return prefactor * appell_A(3, z, -tau, tau, prec) / euler_phi(tau, prec)


def rank_series_value(z, tau, N: int, prec: PrecisionSpec | None = None) -> tuple:
    """sum_{n <= N} sum_m N(m,n) e^(2 pi i m z) q^n from the exact table.

    Returns (value, tail_bound) where the bound uses p(n) <= e^(pi sqrt(2n/3))
    and |e^(2 pi i m z)| <= e^(2 pi n |Im z|). Raises PrecisionError when
    N is too small for the bound to converge at this q.
    """
    prec = prec or PrecisionSpec.default()
    table = rank_table(N)
    with mp.workdps(prec.digits):
        z, tau = mp.mpc(z), mp.mpc(tau)
        q = mp.expjpi(2 * tau)
        zeta = mp.expjpi(2 * z)
        total = mp.mpc(0)
        for n in range(N + 1):
            row = mp.fsum(c * zeta**m for m, c in table.histogram(n).items())
            total += row * q**n

        r = abs(q) * mp.exp(2 * mp.pi * abs(z.imag))
        ratio = mp.exp(mp.pi / mp.sqrt(6 * (N + 1))) * r
        if ratio >= 1:
            raise PrecisionError(f"truncation N={N} is too small for |q|={mp.nstr(abs(q), 5)}")
        tail = mp.exp(mp.pi * mp.sqrt(mp.mpf(2 * (N + 1)) / 3)) * r ** (N + 1) / (1 - ratio)
        return total, tail
