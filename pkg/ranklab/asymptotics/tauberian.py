from dataclasses import dataclass

from mpmath import mp

from ranklab.errors import DomainError


@dataclass(frozen=True)
class TauberianTriple:
    """(A, lam, alpha) for a series with f(e^-eps) ~ lam eps^alpha e^(A/eps)
    as eps -> 0 and weakly increasing non-negative coefficients."""

    A: float
    lam: float
    alpha: float

    def __post_init__(self) -> None:
        if not self.A > 0:
            raise DomainError(f"A must be positive, got {self.A}")


def partition_triple(digits: int = 30) -> TauberianTriple:
    """the triple of 1/phi(q): (pi^2/6, 1/sqrt(2 pi), 1/2)"""
    with mp.workdps(digits):
        return TauberianTriple(A=mp.pi**2 / 6, lam=1 / mp.sqrt(2 * mp.pi), alpha=mp.mpf(1) / 2)


def hardy_ramanujan_estimate(n: int, digits: int = 30):
    """e^(2 pi sqrt(n/6)) / (4 n sqrt 3)"""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    with mp.workdps(digits):
        return mp.exp(2 * mp.pi * mp.sqrt(mp.mpf(n) / 6)) / (4 * n * mp.sqrt(3))


def ingham_estimate(triple: TauberianTriple, n: int, digits: int = 30):
    """lam / (2 sqrt pi) A^(alpha/2 + 1/4) n^-(alpha/2 + 3/4) e^(2 sqrt(A n))"""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    with mp.workdps(digits):
        A, lam, alpha = (mp.mpf(x) for x in (triple.A, triple.lam, triple.alpha))
        return (
            lam
            / (2 * mp.sqrt(mp.pi))
            * A ** (alpha / 2 + mp.mpf(1) / 4)
            * mp.mpf(n) ** -(alpha / 2 + mp.mpf(3) / 4)
            * mp.exp(2 * mp.sqrt(A * n))
        )


def rank_mod_asymptotic(r: int, t: int, n: int, digits: int = 30):
    """p(n)/t through Hardy-Ramanujan; r only has to be a residue"""
    if t < 1:
        raise DomainError(f"modulus must be >= 1, got {t}")
    if not 0 <= r < t:
        raise DomainError(f"residue must lie in 0..{t - 1}, got {r}")
    with mp.workdps(digits):
        return hardy_ramanujan_estimate(n, digits) / t
