"""Appell functions A_l(u, v; tau), the Zwegers mu-function, and the
decomposition of A_l into level-one pieces."""

from mpmath import mp

from ranklab.errors import DomainError, PoleProximityError
from .precision import PrecisionSpec, gaussian_cutoff
from .theta import jacobi_theta


def appell_A(level: int, u, v, tau, prec: PrecisionSpec | None = None, extra_terms: int = 0):
    """A_l(u,v;tau) = e^(pi i l u) sum_n (-1)^(l n) q^(l n(n+1)/2) e^(2 pi i n v) / (1 - e^(2 pi i u) q^n)

    The numerators decay like a Gaussian in n. Past the index where
    |e^(2 pi i u) q^n| leaves [1/2, 2] each denominator is bounded below by
    1/2, so the cutoff is the larger of that index and the Gaussian one.
    """
    if level < 1:
        raise DomainError(f"level must be >= 1, got {level}")
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        u, v, tau = mp.mpc(u), mp.mpc(v), mp.mpc(tau)
        if not tau.imag > 0:
            raise DomainError(f"tau={tau} is not in the upper half-plane")

        x = mp.expjpi(2 * u)
        a = mp.pi * level * tau.imag
        K, _ = gaussian_cutoff(a, a + 2 * mp.pi * abs(v.imag), prec.series_tail_tol / 2)
        crossing = int(mp.ceil((abs(mp.log(abs(x))) + mp.log(2)) / (2 * mp.pi * tau.imag))) + 1
        K = max(K, crossing) + extra_terms

        total = mp.mpc(0)
        biggest = mp.mpf(0)
        for n in range(-K, K + 1):
            denom = 1 - x * mp.expjpi(2 * n * tau)
            if abs(denom) < prec.pole_guard:
                raise PoleProximityError(
                    f"A_{level} denominator at n={n}", mp.nstr(abs(denom), 5), prec.pole_guard
                )
            term = (-1) ** (level * n) * mp.expjpi(level * n * (n + 1) * tau + 2 * n * v) / denom
            total += term
            biggest = max(biggest, abs(term))

        prec.check_rounding(2 * K + 1, biggest, total)
        return mp.expjpi(level * u) * total


def appell_one(u, v, tau, prec: PrecisionSpec | None = None, extra_terms: int = 0):
    """A_1(u,v;tau) = theta(v;tau) mu(u,v;tau), finite where theta(v) vanishes"""
    return appell_A(1, u, v, tau, prec, extra_terms)


def zwegers_mu(u, v, tau, prec: PrecisionSpec | None = None, extra_terms: int = 0):
    prec = prec or PrecisionSpec.default()
    th = jacobi_theta(v, tau, prec, extra_terms)
    if abs(th) < prec.pole_guard:
        raise PoleProximityError("theta(v;tau)", mp.nstr(abs(th), 5), prec.pole_guard)
    with mp.workdps(prec.digits):
        return appell_one(u, v, tau, prec, extra_terms) / th


def appell_A_decomposed(level: int, u, v, tau, prec: PrecisionSpec | None = None):
    """sum_{k=0}^{l-1} e^(2 pi i u k) theta(w_k; l tau) mu(l u, w_k; l tau)
    with w_k = v + k tau + (l-1)/2, which equals A_l(u,v;tau)."""
    if level < 1:
        raise DomainError(f"level must be >= 1, got {level}")
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        u, v, tau = mp.mpc(u), mp.mpc(v), mp.mpc(tau)
        total = mp.mpc(0)
        for k in range(level):
            w = v + k * tau + mp.mpf(level - 1) / 2
            piece = jacobi_theta(w, level * tau, prec) * zwegers_mu(level * u, w, level * tau, prec)
            total += mp.expjpi(2 * u * k) * piece
        return total
