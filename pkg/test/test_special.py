import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp

from ranklab.errors import DomainError, PoleProximityError, PrecisionError, QuadratureError
from ranklab.special import (
    EPS_FLOOR,
    HalfPlanePoint,
    PrecisionSpec,
    QuadratureSpec,
    TRANSFORM_CHECKS,
    a3_collapsed_s1,
    appell_A,
    appell_A3_S1S2,
    appell_A3_split,
    bound_samples,
    euler_phi,
    gaussian_cutoff,
    h_bound,
    h_bound_margin,
    jacobi_theta,
    mordell_h,
    rank_series_value,
    rank_to_appell,
    s2_bound,
    s2_inverted,
    s2_parts,
    transform_samples,
    zwegers_mu,
)
from ranklab.special.sampling import POLE_CLEARANCE


TAU = mp.mpc(0.2, 1.1)
Z = mp.mpc(0.3, 0.1)
U = mp.mpc(0.13, 0.05)
V = mp.mpc(0.37, -0.08)


def test_theta_matches_mpmath():
    with mp.workdps(30):
        for z, tau in [(Z, TAU), (mp.mpc(-0.41, 0.2), mp.mpc(-0.3, 0.7)), (0.25, 1j)]:
            expected = -mp.jtheta(1, mp.pi * z, mp.expjpi(tau))
            assert abs(jacobi_theta(z, tau) - expected) < 1e-20


@settings(max_examples=20, deadline=None)
@given(st.floats(-1, 1), st.floats(-0.5, 0.5))
def test_theta_is_odd(x, y):
    z = mp.mpc(x, y)
    assert abs(jacobi_theta(-z, TAU) + jacobi_theta(z, TAU)) < 1e-18


def test_theta_cutoff_is_stable():
    assert abs(jacobi_theta(0, TAU)) < 1e-20
    assert abs(jacobi_theta(Z, TAU) - jacobi_theta(Z, TAU, extra_terms=10)) < 1e-20


def test_theta_outside_half_plane():
    with pytest.raises(DomainError):
        jacobi_theta(Z, 0.3)


@pytest.mark.parametrize("name", [n for n in TRANSFORM_CHECKS if not n.startswith(("h_", "mu_inv"))])
def test_series_transformation_laws(name):
    keys, fn = TRANSFORM_CHECKS[name]
    point = {"u": U, "v": V, "z": Z, "tau": TAU}
    assert fn(*(point[k] for k in keys)) < 1e-18


@pytest.mark.parametrize("name", ["mu_inversion", "h_parity", "h_inversion", "h_shift", "h_mu_cross"])
def test_integral_transformation_laws(name):
    keys, fn = TRANSFORM_CHECKS[name]
    point = {"u": U, "v": V, "z": Z, "tau": TAU}
    assert fn(*(point[k] for k in keys)) < 1e-10


def test_mu_is_symmetric():
    assert abs(zwegers_mu(U, V, TAU) - zwegers_mu(V, U, TAU)) < 1e-18


def test_pole_guards():
    with pytest.raises(PoleProximityError):
        zwegers_mu(0.2, 0, TAU)
    with pytest.raises(PoleProximityError):
        appell_A(1, 0, 0.3, TAU)
    with pytest.raises(DomainError):
        appell_A(0, U, V, TAU)


def test_mordell_special_value():
    # h(z) + h(z+1) = 2/sqrt(-i tau) e^(pi i (z+1/2)^2/tau) at z = -1/2, tau = i
    assert abs(mordell_h(0.5, 1j) - 1) < 1e-14


def test_mordell_node_stability():
    coarse = mordell_h(Z, TAU, quad=QuadratureSpec(nodes=1))
    fine = mordell_h(Z, TAU, quad=QuadratureSpec(nodes=2))
    assert abs(coarse - fine) < 1e-13


def test_mordell_truncation_stability():
    with pytest.raises(QuadratureError) as info:
        mordell_h(Z, TAU, quad=QuadratureSpec(truncation=1e-3))
    X = info.value.required_truncation
    derived = mordell_h(Z, TAU)
    wide = mordell_h(Z, TAU, quad=QuadratureSpec(truncation=2 * X, nodes=2))
    assert abs(derived - wide) < 1e-13


def test_mordell_truncation_errors():
    with pytest.raises(QuadratureError) as info:
        mordell_h(0.3, 1j, quad=QuadratureSpec(truncation=0.5))
    assert info.value.required_truncation > 0.5
    with pytest.raises(QuadratureError):
        mordell_h(0.3, 1j, quad=QuadratureSpec(max_truncation=1.0))
    with pytest.raises(DomainError):
        QuadratureSpec(scheme="simpson")


def test_h_bound_values():
    assert abs(h_bound(1, 0, 0, 1) - 1) < 1e-25
    with mp.workdps(30):
        assert abs(h_bound(1, 0, -0.5, 1) - 2 * mp.exp(-mp.pi / 4)) < 1e-25


@pytest.mark.parametrize(
    "kappa, alpha, beta, z",
    [(0, 0, 0, 1), (1, 0.5, 0, 1), (1, 0, 0.5, 1), (1, 0, -0.6, 1), (1, 0, 0, -1), (1, 0, 0, 2j)],
)
def test_h_bound_hypotheses(kappa, alpha, beta, z):
    with pytest.raises(DomainError):
        h_bound(kappa, alpha, beta, z)


@pytest.mark.parametrize("args", [(1, 0, 0, 1), (1, 0, -0.5, 1), (2, 0.3, 0.2, 0.5 + 0.3j)])
def test_h_bound_margin(args):
    assert h_bound_margin(*args) >= 0


def test_precision_defaults(monkeypatch):
    monkeypatch.delenv("RANKLAB_PRECISION", raising=False)
    assert PrecisionSpec.default().digits == 30
    assert PrecisionSpec.default(0.1).digits == 60
    assert PrecisionSpec.default(digits=40).quad_tol == pytest.approx(1e-20, rel=1e-9)
    monkeypatch.setenv("RANKLAB_PRECISION", "45")
    assert PrecisionSpec.default().digits == 45


def test_precision_checks():
    with pytest.raises(PrecisionError):
        PrecisionSpec.default().check_eps(EPS_FLOOR / 2)
    with pytest.raises(PrecisionError):
        PrecisionSpec(digits=30).check_eps(0.1)
    with pytest.raises(PrecisionError):
        PrecisionSpec(digits=20, series_tail_tol=1e-25)
    PrecisionSpec(digits=60).check_eps(0.1)


def test_gaussian_cutoff():
    K, bound = gaussian_cutoff(mp.pi, 2, 1e-20)
    assert bound < 1e-20
    assert K >= 2


def test_half_plane_point():
    point = HalfPlanePoint.from_eps(1.0, u=0.25)
    with mp.workdps(30):
        assert abs(point.eps - 1) < 1e-25
        assert abs(point.q0 - mp.exp(-4 * mp.pi**2)) < 1e-30
        assert point.v == -point.tau
    with pytest.raises(DomainError):
        HalfPlanePoint(u=0, v=0, tau=1)


def test_half_plane_point_keeps_working_precision():
    point = HalfPlanePoint.from_eps(0.1)
    assert point.prec.digits == 60
    with mp.workdps(60):
        assert point.v + point.tau == 0
        assert abs(point.eps - mp.mpf(0.1)) < 1e-55


def test_split_sums_to_a3():
    tau = HalfPlanePoint.from_eps(1.0).tau
    with mp.workdps(30):
        direct = appell_A(3, 0.25, -tau, tau)
        parts = appell_A3_S1S2(0.25, tau)
        assert parts.route == "theta_mu"
        assert abs(parts.total - direct) < 1e-10 * max(1, abs(direct))

        general = appell_A3_split(0.25, 0.1 - tau, tau)
        direct = appell_A(3, 0.25, 0.1 - tau, tau)
        assert abs(general.total - direct) < 1e-10 * max(1, abs(direct))


def test_collapsed_s1_matches_theta_mu():
    tau = HalfPlanePoint.from_eps(1.0).tau
    with mp.workdps(30):
        s1 = appell_A3_S1S2(0.25, tau).s1
        assert abs(a3_collapsed_s1(0.25, tau) - s1) < 1e-15 * max(1, abs(s1))


def test_split_at_one_third():
    tau = HalfPlanePoint.from_eps(1.0).tau
    third = mp.mpf(1) / 3
    with mp.workdps(30):
        parts = appell_A3_S1S2(third, tau)
        assert parts.route == "collapsed"
        assert mp.isfinite(parts.s1)
        direct = appell_A(3, third, -tau, tau)
        assert abs(parts.total - direct) < 1e-10 * max(1, abs(direct))
        # just outside the guard the theta-mu route agrees with the collapsed series
        outside = third + 2e-3
        assert abs(appell_A3_S1S2(outside, tau).s1 - a3_collapsed_s1(outside, tau)) < 1e-8


def test_split_domain():
    tau = HalfPlanePoint.from_eps(1.0).tau
    with pytest.raises(DomainError):
        appell_A3_S1S2(0.6, tau)
    with pytest.raises(DomainError):
        appell_A3_S1S2(0.25, 0.1 + 1j)


def test_inverted_s2():
    tau = HalfPlanePoint.from_eps(1.0).tau
    with mp.workdps(30):
        s2 = appell_A3_S1S2(0.4, tau).s2
        assert abs(s2_inverted(0.4, tau) - s2) < 1e-12 * max(1, abs(s2))
        s21, s22 = s2_parts(0.4, tau)
        assert abs(s21 + s22 - s2) < 1e-12 * max(1, abs(s2))


@pytest.mark.parametrize("u", [0.1, 1 / 6])
def test_s2_bound_below_one_sixth(u):
    tau = HalfPlanePoint.from_eps(1.0).tau
    assert abs(appell_A3_S1S2(u, tau).s2) <= s2_bound(u, 1.0)


@pytest.mark.parametrize("u", [0.25, 0.4, 0.5])
def test_s2_bound_above_one_sixth(u):
    tau = HalfPlanePoint.from_eps(1.0).tau
    s21, _ = s2_parts(u, tau)
    assert abs(s21) <= s2_bound(u, 1.0)


@pytest.mark.parametrize("den", [6, 4, 3, 2])
def test_rank_function_through_a3(den):
    z = mp.mpf(1) / den
    value, tail = rank_series_value(z, 1j, 80)
    assert tail < 1e-8
    assert abs(rank_to_appell(z, 1j) - value) < 1e-8


def test_euler_phi_inverts_partitions():
    value, _ = rank_series_value(0, 1j, 80)
    assert abs(value * euler_phi(1j) - 1) < 1e-15


def test_series_truncation_too_small():
    with pytest.raises(PrecisionError):
        rank_series_value(0.25, 0.01j, 5)


def test_samples_are_deterministic():
    assert transform_samples(5, 7) == transform_samples(5, 7)
    assert transform_samples(5, 7) != transform_samples(5, 8)
    for s in transform_samples(20, 3):
        assert 0.6 <= s.tau.imag <= 1.5
        assert abs(s.u * 6 - round(s.u.real * 6)) / 6 >= POLE_CLEARANCE
    assert bound_samples(5, 11) == bound_samples(5, 11)


def test_bound_samples_satisfy_hypotheses():
    for s in bound_samples(30, 11):
        assert h_bound(s.kappa, s.alpha, s.beta, s.z) > 0
