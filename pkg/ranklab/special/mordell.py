from mpmath import mp

from ranklab.errors import DomainError, QuadratureError
from .precision import PrecisionSpec, QuadratureSpec


def mordell_h(z, tau, prec: PrecisionSpec | None = None, quad: QuadratureSpec | None = None):
    """h(z;tau) = integral over R of e^(pi i tau x^2 - 2 pi z x) / cosh(pi x) dx

    The integrand is bounded by e^g(x) with
    g(x) = -pi Im(tau) x^2 + (2 pi |Re z| - pi) |x| + log 2, so the two tails
    beyond X are at most 2 e^g(X) / |g'(X)|. X is the smallest half-integer
    step past the vertex of g that pushes this below quad_tol times
    max(1, peak). The interval [-X, X] is split into unit pieces, each
    refined `nodes` times, and integrated with `scheme`.
    """
    prec = prec or PrecisionSpec.default()
    quad = quad or QuadratureSpec()
    with mp.workdps(prec.digits):
        z, tau = mp.mpc(z), mp.mpc(tau)
        if not tau.imag > 0:
            raise DomainError(f"tau={tau} is not in the upper half-plane")

        a = mp.pi * tau.imag
        c = 2 * mp.pi * abs(z.real) - mp.pi
        vertex = max(c / (2 * a), 0)
        peak = mp.exp(a * vertex * vertex) if c > 0 else mp.mpf(1)
        target = prec.quad_tol * max(1, 2 * peak)

        def tail(X):
            slope = 2 * a * X - c
            return 2 * mp.exp(-a * X * X + c * X + mp.log(2)) / slope

        required = mp.mpf(int(vertex) + 1)
        while tail(required) >= target:
            required += mp.mpf(1) / 2

        if quad.truncation is None:
            if required > quad.max_truncation:
                raise QuadratureError(
                    f"truncation X={mp.nstr(required, 5)} exceeds the limit {quad.max_truncation}",
                    float(required),
                )
            X = required
        else:
            X = mp.mpf(quad.truncation)
            if X < required:
                raise QuadratureError(
                    f"truncation X={quad.truncation} leaves a tail above {prec.quad_tol}",
                    float(required),
                )

        pieces = int(mp.ceil(2 * X)) * quad.nodes
        points = mp.linspace(-X, X, pieces + 1)

        def integrand(x):
            return mp.expjpi(tau * x * x) * mp.exp(-2 * mp.pi * z * x) / mp.cosh(mp.pi * x)

        value, error = mp.quad(integrand, points, method=quad.scheme, error=True)
        if error > target:
            raise QuadratureError(
                f"quadrature error estimate {mp.nstr(error, 3)} above {mp.nstr(target, 3)}; "
                "raise nodes or precision",
                float(X),
            )
        return value
