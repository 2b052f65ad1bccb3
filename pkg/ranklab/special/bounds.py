from mpmath import mp

from ranklab.errors import DomainError


def h_bound(kappa: int, alpha, beta, z, digits: int = 30):
    """Upper bound for |h(i beta/(kappa z) + alpha; i/(kappa z))|.

    Valid for kappa >= 1, |alpha| < 1/2, -1/2 <= beta < 1/2 and Re z > 0. With
    w = Re(1/z): for beta != -1/2 the bound is
    |sec(pi beta)| sqrt(kappa / w) exp(-pi beta^2 w / kappa + pi kappa alpha^2 / w),
    and at beta = -1/2 it is (1 + sqrt(kappa / w)) exp(-pi w / (4 kappa)).
    """
    with mp.workdps(digits):
        alpha, beta, z = mp.mpf(alpha), mp.mpf(beta), mp.mpc(z)
        if kappa < 1 or int(kappa) != kappa:
            raise DomainError(f"kappa must be a positive integer, got {kappa}")
        if not abs(alpha) < mp.mpf(1) / 2:
            raise DomainError(f"|alpha| must be < 1/2, got {alpha}")
        if not -mp.mpf(1) / 2 <= beta < mp.mpf(1) / 2:
            raise DomainError(f"beta must lie in [-1/2, 1/2), got {beta}")
        if not z.real > 0:
            raise DomainError(f"Re z must be positive, got {z}")

        w = (1 / z).real
        if beta == -mp.mpf(1) / 2:
            return (1 + mp.sqrt(kappa / w)) * mp.exp(-mp.pi * w / (4 * kappa))
        return (
            abs(mp.sec(mp.pi * beta))
            * mp.sqrt(kappa / w)
            * mp.exp(-mp.pi * beta * beta * w / kappa + mp.pi * kappa * alpha * alpha / w)
        )


def h_bound_argument(kappa: int, alpha, beta, z, digits: int = 30) -> tuple:
    """(z_h, tau_h) = (i beta/(kappa z) + alpha, i/(kappa z)), the point h_bound covers"""
    with mp.workdps(digits):
        z = mp.mpc(z)
        return 1j * mp.mpf(beta) / (kappa * z) + mp.mpf(alpha), 1j / (kappa * z)
