import numpy as np
import pytest

from sioqubit.channel import TransferParams, builtin, transfer_params
from sioqubit.linalg import I2, bloch_to_density, trace_distance
from sioqubit.semigroup import (
    DiscriminantCase,
    Trajectory,
    block_eigenvalues,
    iterate_oracle,
    power_closed_form,
    relaxing_report,
    trajectory,
)
from sioqubit.typical_form import abcd, random_typical_form, to_kraus


def tp_of(name, q, theta=None):
    return transfer_params(builtin(name, q, theta))


def test_flip_channels_not_relaxing():
    for q in (0.1, 0.5, 0.9):
        for name in ("bit-flip", "bit-phase-flip", "phase-flip"):
            rep = relaxing_report(tp_of(name, q))
            assert not rep.relaxing


def test_bit_flip_spectrum():
    q = 0.3
    rep = relaxing_report(tp_of("bit-flip", q))
    mods = sorted([rep.mod1, rep.mod2])
    assert mods == pytest.approx([1 - q, 1.0])
    assert rep.case is DiscriminantCase.DISTINCT_REAL


def test_depolarizing_relaxing():
    for q in (0.1, 0.5, 1.0):
        rep = relaxing_report(tp_of("depolarizing", q))
        assert rep.relaxing
        assert rep.mod1 == pytest.approx(1 - q)
        assert rep.case is DiscriminantCase.REPEATED


def test_f1_theta_relaxing_iff_cos_not_one():
    for q in (0.25, 0.75):
        for theta in (0.0, np.pi / 6, np.pi / 2, 5 * np.pi / 6, np.pi):
            rep = relaxing_report(tp_of("f1-theta", q, theta))
            assert rep.relaxing == (abs(np.cos(theta)) != 1.0)


def test_b1b2_condition_is_z_interior():
    rep = relaxing_report(tp_of("phase-flip", 0.5))
    assert rep.z == pytest.approx(1.0)
    assert not rep.b1b2_nonzero
    rep = relaxing_report(tp_of("depolarizing", 0.5))
    assert rep.b1b2_nonzero


def test_eigenvalue_moduli_bounded():
    rng = np.random.default_rng(43)
    for _ in range(300):
        rep = relaxing_report(abcd(random_typical_form(rng)))
        assert rep.mod1 <= 1 + 1e-9
        assert rep.mod2 <= 1 + 1e-9


def test_complex_case_modulus_identity():
    rng = np.random.default_rng(47)
    found = 0
    while found < 50:
        tp = abcd(random_typical_form(rng))
        lam1, _, disc, case = block_eigenvalues(tp)
        if case is DiscriminantCase.COMPLEX_PAIR:
            found += 1
            assert abs(lam1) ** 2 == pytest.approx(
                tp.a * tp.d - tp.b * tp.c, abs=1e-12)
            assert lam1.imag > 0


def test_power_n0_n1():
    tp = tp_of("f1-theta", 0.3, 0.8)
    assert power_closed_form(tp, 0) == TransferParams.identity()
    p1 = power_closed_form(tp, 1)
    for n in "abcdz":
        assert getattr(p1, n) == pytest.approx(getattr(tp, n), abs=1e-12)


def test_power_bit_flip_diagonal():
    q = 0.2
    tp = tp_of("bit-flip", q)
    for n in (1, 5, 40):
        pn = power_closed_form(tp, n)
        assert pn.a == pytest.approx(1.0)
        assert pn.d == pytest.approx((1 - q) ** n)
        assert pn.z == pytest.approx((1 - q) ** n)
        assert (pn.b, pn.c) == pytest.approx((0, 0), abs=1e-12)


def test_power_case3_matches_iteration():
    tp = tp_of("f1-theta", 0.5, np.pi / 3)
    _, _, disc, case = block_eigenvalues(tp)
    assert case is DiscriminantCase.COMPLEX_PAIR
    block = tp.block()
    p10 = power_closed_form(tp, 10)
    ref = np.linalg.matrix_power(block, 10)
    assert np.abs(p10.block() - ref).max() < 1e-9


def test_power_repeated_case_boundary():
    # discriminant-zero curve of the f1-theta family
    q = 0.4
    theta = np.arctan(q / (2 * np.sqrt(1 - q)))
    tp = tp_of("f1-theta", q, theta)
    _, _, disc, case = block_eigenvalues(tp)
    assert case is DiscriminantCase.REPEATED
    block = tp.block()
    for n in (2, 10, 60):
        pn = power_closed_form(tp, n)
        ref = np.linalg.matrix_power(block, n)
        assert np.abs(pn.block() - ref).max() < 1e-9


def test_power_underflow_large_n():
    tp = tp_of("depolarizing", 0.5)
    pn = power_closed_form(tp, 5000)
    assert pn.a == 0.0 and pn.z == 0.0


def test_iterate_oracle_basics():
    ch = builtin("depolarizing", 1.0)
    rho = bloch_to_density([0.3, -0.2, 0.4])
    assert np.abs(iterate_oracle(ch, rho, 0) - rho).max() == 0
    assert np.abs(iterate_oracle(ch, rho, 1) - 0.5 * I2).max() < 1e-15


def test_semigroup_law():
    ch = builtin("f1-theta", 0.3, 1.2)
    rho = bloch_to_density([0.1, 0.5, -0.3])
    lhs = iterate_oracle(ch, rho, 7)
    rhs = iterate_oracle(ch, iterate_oracle(ch, rho, 3), 4)
    assert np.abs(lhs - rhs).max() < 1e-12


def test_trajectory_depolarizing_decay():
    ch = builtin("depolarizing", 0.5)
    traj = trajectory(ch, bloch_to_density([1, 0, 0]), 10)
    assert len(traj) == 11
    for k, d in enumerate(traj.distances):
        assert d == pytest.approx(0.5 * 0.5 ** k, abs=1e-12)


def test_trajectory_bit_flip_fixed_point():
    ch = builtin("bit-flip", 0.8)
    traj = trajectory(ch, bloch_to_density([1, 0, 0]), 20)
    assert all(d == pytest.approx(0.5, abs=1e-12) for d in traj.distances)


def test_trajectory_relaxing_decay_bound():
    rng = np.random.default_rng(53)
    from sioqubit.checks import _sample_relaxing_tf
    tf = _sample_relaxing_tf(rng, margin_cap=0.9)
    ch = to_kraus(tf)
    traj = trajectory(ch, bloch_to_density([0, 0, 1]), 200)
    assert traj.distances[-1] < 1e-6


def test_trajectory_limits():
    ch = builtin("bit-flip", 0.5)
    rho = 0.5 * I2
    with pytest.raises(ValueError):
        trajectory(ch, rho, 10**6 + 1)
    with pytest.raises(ValueError):
        trajectory(ch, rho, -1)


def test_trajectory_csv():
    ch = builtin("depolarizing", 0.5)
    traj = trajectory(ch, bloch_to_density([1, 0, 0]), 2)
    lines = traj.to_csv().strip().split("\n")
    assert lines[0] == "step,distance,rx,ry,rz"
    assert len(lines) == 4
    first = lines[1].split(",")
    assert first[0] == "0" and float(first[1]) == 0.5
    assert float(first[2]) == 1.0


def test_closed_form_agrees_with_state_iteration():
    # closed-form transfer powers against the Kraus-level oracle
    q, th = 0.35, 0.9
    ch = builtin("f1-theta", q, th)
    tp = transfer_params(ch)
    v0 = np.array([0.4, -0.3, 0.5])
    rho = bloch_to_density(v0)
    from sioqubit.linalg import density_to_bloch
    for n in (1, 3, 17):
        r_oracle = density_to_bloch(iterate_oracle(ch, rho, n))
        tpn = power_closed_form(tp, n)
        r_cf = np.array([*(tpn.block() @ v0[:2]), tpn.z * v0[2]])
        assert np.abs(r_oracle - r_cf).max() < 1e-10
