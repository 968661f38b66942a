"""Fixed-size 2x2 complex linear algebra: Pauli/phase constants, Bloch
conversions, density-matrix validation and trace distance.

Everything here is closed-form; no iterative solvers are used anywhere.
Matrices are plain ``numpy`` arrays of shape (2, 2) and dtype complex128,
Bloch vectors are length-3 float arrays.
"""

from __future__ import annotations

import numpy as np

# validity tolerance for state checks; test-level equality is tighter (1e-12)
EPS = 1e-9

I2 = np.eye(2, dtype=np.complex128)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PHASE_S = np.array([[1, 0], [0, 1j]], dtype=np.complex128)

PAULIS = (SIGMA1, SIGMA2, SIGMA3)


class InvalidStateError(ValueError):
    """Raised when a matrix or vector fails density/Bloch validation."""


def as_mat2(m) -> np.ndarray:
    """Coerce to a finite complex 2x2 array."""
    a = np.asarray(m, dtype=np.complex128)
    if a.shape != (2, 2):
        raise ValueError(f"expected 2x2 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(np.float64))):
        raise ValueError("matrix has non-finite entries")
    return a


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def herm_eigvals(a: np.ndarray) -> tuple[float, float]:
    """Eigenvalues of a Hermitian 2x2 matrix by the quadratic formula,
    returned ascending."""
    a = np.asarray(a)
    mean = 0.5 * (a[0, 0].real + a[1, 1].real)
    radius = np.hypot(0.5 * (a[0, 0].real - a[1, 1].real), abs(a[0, 1]))
    return mean - radius, mean + radius


def check_density(rho, eps: float = EPS) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, positive
    semidefinite (eigenvalues in [-eps, 0] are tolerated, below -eps rejected).

    Returns the validated array; raises InvalidStateError otherwise.
    """
    rho = as_mat2(rho)
    if np.abs(rho - adjoint(rho)).max() > eps:
        raise InvalidStateError("density matrix is not Hermitian")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > eps:
        raise InvalidStateError(f"density matrix trace {tr} != 1")
    lo, _ = herm_eigvals(rho)
    if lo < -eps:
        raise InvalidStateError(f"density matrix has negative eigenvalue {lo}")
    return rho


def as_bloch(v) -> np.ndarray:
    """Coerce to a finite length-3 float vector."""
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (3,):
        raise ValueError(f"expected length-3 Bloch vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("Bloch vector has non-finite entries")
    return v


def check_bloch(v, eps: float = EPS) -> np.ndarray:
    """Validate that a Bloch vector lies in the unit ball (norm <= 1 + eps)."""
    v = as_bloch(v)
    if np.linalg.norm(v) > 1.0 + eps:
        raise InvalidStateError(f"Bloch vector norm {np.linalg.norm(v)} > 1")
    return v


def bloch_to_density(v) -> np.ndarray:
    """rho = (I + v . sigma) / 2 for a Bloch vector in the unit ball."""
    v = check_bloch(v)
    return 0.5 * (I2 + v[0] * SIGMA1 + v[1] * SIGMA2 + v[2] * SIGMA3)


def density_to_bloch(rho) -> np.ndarray:
    """Bloch components r_i = tr(rho sigma_i); exact inverse of
    bloch_to_density up to round-off."""
    rho = as_mat2(rho)
    return np.array([np.trace(rho @ s).real for s in PAULIS])


def trace_distance(rho, sigma) -> float:
    """(1/2) ||rho - sigma||_1 via the closed-form Hermitian eigenvalues of
    the difference. Lies in [0, 1] for states."""
    d = as_mat2(rho) - as_mat2(sigma)
    lo, hi = herm_eigvals(d)
    return 0.5 * (abs(lo) + abs(hi))


def complex_to_json(c: complex) -> list[float]:
    """Serialize a complex scalar as [re, im]."""
    c = complex(c)
    return [c.real, c.imag]


def complex_from_json(pair) -> complex:
    """Parse a [re, im] pair."""
    if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
        raise ValueError(f"expected [re, im] pair, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def mat2_to_json(m) -> list[list[list[float]]]:
    """Serialize a 2x2 matrix as row-major nested [re, im] pairs."""
    m = as_mat2(m)
    return [[complex_to_json(m[i, j]) for j in range(2)] for i in range(2)]


def mat2_from_json(rows) -> np.ndarray:
    """Parse the row-major nested-pair matrix encoding."""
    if not (isinstance(rows, (list, tuple)) and len(rows) == 2
            and all(isinstance(r, (list, tuple)) and len(r) == 2 for r in rows)):
        raise ValueError("expected 2x2 nested array of [re, im] pairs")
    return as_mat2([[complex_from_json(rows[i][j]) for j in range(2)]
                    for i in range(2)])
