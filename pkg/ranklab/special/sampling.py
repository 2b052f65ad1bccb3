"""Seeded sample points for the transformation and bound checks.

Points are drawn from fixed boxes with numpy's default generator and
rejected when they fall near a pole or a zero of theta, so the same seed
always yields the same admissible points.
"""

from dataclasses import dataclass

import numpy as np

from ranklab.errors import DomainError


# clearance from u in Z/6 and v in Z/2
POLE_CLEARANCE = 0.03


@dataclass(frozen=True)
class TransformSample:
    u: complex
    v: complex
    z: complex
    tau: complex

    def to_dict(self) -> dict[str, str]:
        return {k: repr(getattr(self, k)) for k in ("u", "v", "z", "tau")}


@dataclass(frozen=True)
class BoundSample:
    kappa: int
    alpha: float
    beta: float
    z: complex

    def to_dict(self) -> dict[str, str]:
        return {k: repr(getattr(self, k)) for k in ("kappa", "alpha", "beta", "z")}


def transform_samples(n: int, seed: int) -> list[TransformSample]:
    """Re tau in [-1/2, 1/2], Im tau in [0.6, 1.5]; u, v and z with real part in
    [-1/2, 1/2] and |Im| <= 0.3 Im tau."""
    if n < 0:
        raise DomainError(f"sample count must be non-negative, got {n}")
    rng = np.random.default_rng(seed)
    samples = []
    while len(samples) < n:
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.6, 1.5))
        u, v, z = (
            complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3) * tau.imag)
            for _ in range(3)
        )
        if _near_lattice(u, 6) or _near_lattice(v, 2):
            continue
        samples += [TransformSample(u, v, z, tau)]
    return samples


def bound_samples(n: int, seed: int) -> list[BoundSample]:
    """kappa in {1, 2, 3}, |alpha| <= 0.45, beta in [-1/2, 0.45] with the
    endpoint -1/2 drawn one time in ten, Re z in [0.25, 1.5], |Im z| <= 0.75"""
    if n < 0:
        raise DomainError(f"sample count must be non-negative, got {n}")
    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(n):
        kappa = int(rng.integers(1, 4))
        alpha = float(rng.uniform(-0.45, 0.45))
        beta = -0.5 if rng.random() < 0.1 else float(rng.uniform(-0.5, 0.45))
        z = complex(rng.uniform(0.25, 1.5), rng.uniform(-0.75, 0.75))
        samples += [BoundSample(kappa, alpha, beta, z)]
    return samples


def _near_lattice(w: complex, denom: int) -> bool:
    nearest = round(w.real * denom) / denom
    return abs(w - nearest) < POLE_CLEARANCE
