import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sioqubit.linalg import (
    I2,
    PHASE_S,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    InvalidStateError,
    adjoint,
    bloch_to_density,
    check_density,
    complex_from_json,
    complex_to_json,
    density_to_bloch,
    herm_eigvals,
    mat2_from_json,
    mat2_to_json,
    trace_distance,
)


def test_pauli_involutions():
    for s in (SIGMA1, SIGMA2, SIGMA3):
        assert np.abs(s @ s - I2).max() < 1e-15


def test_phase_operator_identities():
    Sd = adjoint(PHASE_S)
    assert np.abs(PHASE_S @ Sd - I2).max() < 1e-15
    assert np.abs(PHASE_S @ SIGMA1 @ Sd - SIGMA2).max() < 1e-15
    # direct multiplication with S = diag(1, i)
    assert np.abs(Sd @ SIGMA2 @ PHASE_S - SIGMA1).max() < 1e-15


def test_adjoint():
    assert np.abs(adjoint(PHASE_S) - np.diag([1, -1j])).max() == 0
    assert np.abs(adjoint(SIGMA2) - SIGMA2).max() == 0
    a = np.array([[1 + 2j, 3], [4j, -1]])
    assert np.abs(adjoint(adjoint(a)) - a).max() == 0


def test_bloch_to_density_examples():
    assert np.abs(bloch_to_density([0, 0, 0]) - 0.5 * I2).max() == 0
    assert np.abs(bloch_to_density([0, 0, 1]) - np.diag([1.0, 0.0])).max() == 0
    plus = 0.5 * np.ones((2, 2))
    assert np.abs(bloch_to_density([1, 0, 0]) - plus).max() == 0


def test_density_to_bloch_examples():
    assert np.allclose(density_to_bloch(0.5 * I2), [0, 0, 0])
    assert np.allclose(density_to_bloch(np.diag([1.0, 0.0])), [0, 0, 1])
    rho_y = 0.5 * np.array([[1, -1j], [1j, 1]])
    assert np.allclose(density_to_bloch(rho_y), [0, 1, 0])


def test_bloch_norm_rejected():
    with pytest.raises(InvalidStateError):
        bloch_to_density([1, 1, 1])


def test_density_validation():
    check_density(np.diag([0.3, 0.7]))
    with pytest.raises(InvalidStateError):
        check_density(np.diag([1.2, -0.2]))
    with pytest.raises(InvalidStateError):
        check_density(np.array([[0.5, 1j], [0.5j, 0.5]]))
    with pytest.raises(InvalidStateError):
        check_density(np.diag([0.6, 0.6]))


def test_herm_eigvals_closed_form():
    rng = np.random.default_rng(7)
    for _ in range(100):
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        h = m + adjoint(m)
        lo, hi = herm_eigvals(h)
        ref = np.linalg.eigvalsh(h)
        assert np.allclose([lo, hi], ref, atol=1e-12)


def test_trace_distance_examples():
    rho = np.diag([0.3, 0.7])
    assert trace_distance(rho, rho) == 0
    assert trace_distance(np.diag([1.0, 0.0]), np.diag([0.0, 1.0])) == pytest.approx(1.0)
    assert trace_distance(np.diag([1.0, 0.0]), 0.5 * I2) == pytest.approx(0.5)


def test_trace_distance_metric_properties():
    rng = np.random.default_rng(11)
    for _ in range(50):
        states = []
        for _ in range(3):
            v = rng.normal(size=3)
            v = v / np.linalg.norm(v) * rng.uniform(0, 1)
            states.append(bloch_to_density(v))
        a, b, c = states
        assert trace_distance(a, b) == pytest.approx(trace_distance(b, a))
        assert trace_distance(a, b) >= 0
        assert trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-12


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(-1, 1), min_size=3, max_size=3))
def test_bloch_round_trip(v):
    v = np.array(v)
    n = np.linalg.norm(v)
    if n > 1:
        v = v / n
    back = density_to_bloch(bloch_to_density(v))
    assert np.abs(back - v).max() < 1e-12


def test_json_conventions():
    assert complex_to_json(1 - 2j) == [1.0, -2.0]
    assert complex_from_json([1.0, -2.0]) == 1 - 2j
    m = np.array([[1, 2j], [3, -4]])
    assert np.abs(mat2_from_json(mat2_to_json(m)) - m).max() == 0
    with pytest.raises(ValueError):
        complex_from_json([1.0])
    with pytest.raises(ValueError):
        mat2_from_json([[1, 2], [3, 4]])
