from mpmath import mp

from ranklab.errors import DomainError
from .precision import PrecisionSpec, gaussian_cutoff


def jacobi_theta(z, tau, prec: PrecisionSpec | None = None, extra_terms: int = 0):
    """theta(z;tau) = sum over n in 1/2 + Z of exp(pi i n^2 tau + 2 pi i n (z + 1/2)).

    Summed symmetrically over |n| <= K + 1/2, where K certifies the Gaussian
    tail below `series_tail_tol`. Odd in z, so theta(0;tau) = 0.
    """
    prec = prec or PrecisionSpec.default()
    with mp.workdps(prec.digits):
        z, tau = mp.mpc(z), mp.mpc(tau)
        if not tau.imag > 0:
            raise DomainError(f"tau={tau} is not in the upper half-plane")

        K, _ = gaussian_cutoff(mp.pi * tau.imag, 2 * mp.pi * abs(z.imag), prec.series_tail_tol)
        K += extra_terms

        shift = z + mp.mpf(1) / 2
        total = mp.mpc(0)
        biggest = mp.mpf(0)
        for k in range(-K - 1, K + 1):
            n = k + mp.mpf(1) / 2
            term = mp.expjpi(n * n * tau + 2 * n * shift)
            total += term
            biggest = max(biggest, abs(term))

        prec.check_rounding(2 * K + 2, biggest, total)
        return total
