from mpmath import mp

from ranklab.errors import DomainError, IdentityMismatchError
from ranklab.series import zqs_eval_root_of_unity
from .partitions import partition_numbers
from .tables import rank_generating_function, rank_mod_table


def reconstruct_rank_mod(t: int, N_max: int, form: str = "plain", dps: int = 30) -> list[list]:
    """Rebuilds N(r,t;n) from p(n) and R(zeta_t^j; q).

    "plain" sums over every j = 1..t-1 with weight zeta_t^(-rj); "symmetric"
    pairs j with t-j and adds the R(-1;q) term separately when t is even.
    Returns rows[n][r] as mpc.
    """
    if t < 1:
        raise DomainError(f"modulus must be >= 1, got {t}")
    if form not in ("plain", "symmetric"):
        raise DomainError(f"unknown identity form '{form}'")

    R = rank_generating_function(N_max)
    p = partition_numbers(N_max)
    with mp.workdps(dps):
        evals = {j: zqs_eval_root_of_unity(R, j, t, dps) for j in range(1, t)}
        rows = []
        for n in range(N_max + 1):
            row = []
            for r in range(t):
                acc = mp.mpc(p[n])
                if form == "plain":
                    for j in range(1, t):
                        acc += mp.expjpi(mp.mpf(-2 * r * j) / t) * evals[j][n]
                else:
                    for j in range(1, (t - 1) // 2 + 1):
                        weight = 2 * mp.cospi(mp.mpf(2 * r * j) / t)
                        acc += weight * evals[j][n]
                    if t % 2 == 0:
                        acc += (-1) ** r * evals[t // 2][n]
                row += [acc / t]
            rows += [row]
    return rows


def verify_generating_identity(
    t: int, N_max: int, tol: float = 1e-9, form: str = "plain", dps: int = 30
) -> mp.mpf:
    """Maximum deviation between reconstructed and exact N(r,t;n) over
    n <= N_max, counting imaginary parts as deviation. Raises
    IdentityMismatchError with the worst (r, n) when it exceeds tol."""
    exact = rank_mod_table(t, N_max)
    rows = reconstruct_rank_mod(t, N_max, form, dps)

    with mp.workdps(dps):
        worst = mp.mpf(0)
        witness = {"t": t, "r": 0, "n": 0}
        for n, row in enumerate(rows):
            for r, value in enumerate(row):
                dev = max(abs(value.real - exact.count(r, n)), abs(value.imag))
                if dev > worst:
                    worst = dev
                    witness = {"t": t, "r": r, "n": n}

    if worst > tol:
        raise IdentityMismatchError(f"generating_identity_{form}", worst, witness)
    return worst
