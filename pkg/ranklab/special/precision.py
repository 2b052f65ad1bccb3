import os
from dataclasses import dataclass, field

from mpmath import mp

from ranklab.errors import DomainError, PrecisionError


PRECISION_ENV = "RANKLAB_PRECISION"

# smallest eps the analytic scans accept at the default digits
EPS_FLOOR = 0.05


@dataclass(frozen=True)
class PrecisionSpec:
    digits: int = 30
    series_tail_tol: float = 1e-20
    quad_tol: float = 1e-15
    pole_guard: float = 1e-6
    singularity_guard: float = 1e-3

    def __post_init__(self) -> None:
        if self.digits < 16:
            raise DomainError(f"at least 16 digits are required, got {self.digits}")
        for name in ("series_tail_tol", "quad_tol", "pole_guard", "singularity_guard"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive")
        # digits must resolve the tightest tolerance
        if min(self.series_tail_tol, self.quad_tol) < 10.0 ** (-self.digits + 2):
            raise PrecisionError(
                f"{self.digits} digits cannot resolve tolerance "
                f"{min(self.series_tail_tol, self.quad_tol)}"
            )

    @classmethod
    def default(cls, eps: float | None = None, **overrides) -> "PrecisionSpec":
        """30 digits, or 60 below eps = 0.5; the environment variable
        RANKLAB_PRECISION replaces the digit count."""
        digits = required_digits(eps)
        env = os.environ.get(PRECISION_ENV)
        if env:
            digits = int(env)
        overrides.setdefault("digits", digits)
        digits = overrides["digits"]
        overrides.setdefault("series_tail_tol", 10.0 ** -(digits - 10))
        overrides.setdefault("quad_tol", 10.0 ** -(digits // 2))
        return cls(**overrides)

    def check_eps(self, eps: float) -> None:
        if eps < EPS_FLOOR:
            raise PrecisionError(
                f"eps={eps} is below the supported floor {EPS_FLOOR}"
            )
        need = required_digits(eps)
        if self.digits < need:
            raise PrecisionError(
                f"eps={eps} needs at least {need} digits, got {self.digits}"
            )

    def check_rounding(self, n_terms: int, max_term, value) -> None:
        """rejects sums whose rounding estimate exceeds the tail tolerance"""
        with mp.workdps(self.digits):
            rounding = n_terms * max_term * mp.mpf(10) ** (-self.digits)
            if rounding > self.series_tail_tol * max(1, abs(value)):
                raise PrecisionError(
                    f"rounding estimate {mp.nstr(rounding, 3)} exceeds tolerance at "
                    f"{self.digits} digits; raise the precision"
                )


def required_digits(eps: float | None) -> int:
    if eps is None or eps >= 0.5:
        return 30
    return 60


@dataclass(frozen=True)
class QuadratureSpec:
    """Truncation [-X, X] and subdivision for the Mordell integral. With
    `truncation=None` X is derived from the integrand's Gaussian envelope."""

    truncation: float | None = None
    nodes: int = 2
    scheme: str = "tanh-sinh"
    max_truncation: float = 400.0

    def __post_init__(self) -> None:
        if self.truncation is not None and self.truncation <= 0:
            raise DomainError("truncation must be positive")
        if self.nodes < 1:
            raise DomainError("nodes must be >= 1")
        if self.scheme not in ("tanh-sinh", "gauss-legendre"):
            raise DomainError(f"unknown quadrature scheme '{self.scheme}'")


@dataclass(frozen=True)
class HalfPlanePoint:
    """A point (u, v, tau) with Im(tau) > 0, plus derived quantities."""

    u: complex
    v: complex
    tau: complex
    prec: PrecisionSpec = field(default_factory=PrecisionSpec.default)

    def __post_init__(self) -> None:
        if not mp.mpc(self.tau).imag > 0:
            raise DomainError(f"tau={self.tau} is not in the upper half-plane")

    @classmethod
    def from_eps(
        cls,
        eps: float,
        u: complex = 0,
        v: complex | None = None,
        prec: PrecisionSpec | None = None,
    ) -> "HalfPlanePoint":
        """tau = i eps / (2 pi); v defaults to -tau"""
        if not eps > 0:
            raise DomainError(f"eps must be positive, got {eps}")
        prec = prec or PrecisionSpec.default(eps)
        with mp.workdps(prec.digits):
            tau = mp.mpc(0, mp.mpf(eps) / (2 * mp.pi))
            return cls(u=u, v=-tau if v is None else v, tau=tau, prec=prec)

    @property
    def q(self):
        with mp.workdps(self.prec.digits):
            return mp.expjpi(2 * mp.mpc(self.tau))

    @property
    def q0(self):
        """exp(-2 pi i / tau)"""
        with mp.workdps(self.prec.digits):
            return mp.expjpi(-2 / mp.mpc(self.tau))

    @property
    def eps(self):
        """eps with tau = i eps / (2 pi), defined on the imaginary axis"""
        with mp.workdps(self.prec.digits):
            tau = mp.mpc(self.tau)
            if tau.real != 0:
                raise DomainError(f"tau={self.tau} is not purely imaginary")
            return 2 * mp.pi * tau.imag


def gaussian_cutoff(a, b, tol) -> tuple[int, object]:
    """Smallest K >= b/a + 1 whose two-sided tail bound
    2 e^(-a K^2 + b K) / (1 - e^-a) lies below tol, for terms bounded by
    e^(-a k^2 + b |k|). Returns (K, bound)."""
    a, b = mp.mpf(a), mp.mpf(b)
    if not a > 0:
        raise DomainError("Gaussian rate must be positive")
    K = int(mp.ceil(b / a)) + 1
    ratio = 1 - mp.exp(-a)
    # jump close to the root of a K^2 - b K = -log(tol), then walk up
    root = (b + mp.sqrt(b * b - 4 * a * mp.log(tol * ratio / 2))) / (2 * a)
    K = max(K, int(mp.floor(root)))
    while True:
        bound = 2 * mp.exp(-a * K * K + b * K) / ratio
        if bound < tol:
            return K, bound
        K += 1


def principal_sqrt_minus_i(tau):
    """sqrt(-i tau), principal branch; -i tau has positive real part on H"""
    return mp.sqrt(-1j * mp.mpc(tau))
