__all__ = [
    "PrecisionSpec",
    "QuadratureSpec",
    "HalfPlanePoint",
    "EPS_FLOOR",
    "gaussian_cutoff",
    "jacobi_theta",
    "appell_A",
    "appell_one",
    "appell_A_decomposed",
    "zwegers_mu",
    "mordell_h",
    "h_bound",
    "h_bound_argument",
    "A3Split",
    "appell_A3_split",
    "appell_A3_S1S2",
    "a3_collapsed_s1",
    "s2_inverted",
    "s2_parts",
    "s2_bound",
    "euler_phi",
    "rank_to_appell",
    "rank_series_value",
    "TransformSample",
    "BoundSample",
    "transform_samples",
    "bound_samples",
    "TRANSFORM_CHECKS",
    "relative_residual",
    "h_bound_margin",
]

from .precision import PrecisionSpec, QuadratureSpec, HalfPlanePoint, EPS_FLOOR, gaussian_cutoff
from .theta import jacobi_theta
from .appell import appell_A, appell_one, appell_A_decomposed, zwegers_mu
from .mordell import mordell_h
from .bounds import h_bound, h_bound_argument
from .split import (
    A3Split,
    appell_A3_split,
    appell_A3_S1S2,
    a3_collapsed_s1,
    s2_inverted,
    s2_parts,
    s2_bound,
)
from .rank_appell import euler_phi, rank_to_appell, rank_series_value
from .sampling import TransformSample, BoundSample, transform_samples, bound_samples
from .identities import TRANSFORM_CHECKS, relative_residual, h_bound_margin
