"""Kraus-operator channels on one qubit.

Covers construction with completeness validation, classification
(incoherent / strictly incoherent / bistochastic), channel application and
its Heisenberg dual, extraction of the block transfer parameters
(a, b, c, d, z), and the builtin noise families: bit-flip, bit+phase-flip,
phase-flip, depolarizing and the phase-twisted bit-flip.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    EPS,
    I2,
    PAULIS,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    adjoint,
    as_mat2,
    check_density,
)

# entries smaller than this are structural zeros for incoherence patterns
NULL_THRESHOLD = 1e-12

BUILTIN_NAMES = ("bit-flip", "bit-phase-flip", "phase-flip", "depolarizing",
                 "f1-theta")


class ChannelError(ValueError):
    """Raised when a Kraus set fails a structural requirement."""


class ClassificationError(ChannelError):
    """Channel does not belong to the class an operation requires."""


class StructureViolationError(ChannelError):
    """Transfer representation is not of the proven block form."""


@dataclass(frozen=True)
class ChannelClass:
    """Classification flags for a Kraus channel."""
    trace_preserving: bool
    incoherent: bool
    strictly_incoherent: bool
    bistochastic: bool


@dataclass(frozen=True)
class TransferParams:
    """Action on the Bloch ball of a bistochastic SIO: the 2x2 block
    [[a, c], [b, d]] on span{sigma1, sigma2} (columns are the images of
    sigma1 and sigma2) plus the scalar z on sigma3."""
    a: float
    b: float
    c: float
    d: float
    z: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "z"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not (-1.0 - EPS <= self.z <= 1.0 + EPS):
            raise ValueError(f"z = {self.z} outside [-1, 1]")
        if np.linalg.norm(self.block(), 2) > 1.0 + 1e-7:
            raise ValueError("transfer block does not contract the Bloch ball")

    def block(self) -> np.ndarray:
        return np.array([[self.a, self.c], [self.b, self.d]])

    @staticmethod
    def identity() -> "TransferParams":
        return TransferParams(1.0, 0.0, 0.0, 1.0, 1.0)


class KrausChannel:
    """A channel Phi(rho) = sum_j K_j rho K_j^* given by its Kraus list.

    Zero operators are dropped at construction; completeness
    sum_j K_j^* K_j = I is enforced (trace preservation).
    """

    def __init__(self, kraus, eps: float = EPS):
        ops = [as_mat2(k) for k in kraus]
        ops = [k for k in ops if np.abs(k).max() >= NULL_THRESHOLD]
        if not ops:
            raise ChannelError("channel needs at least one nonzero Kraus operator")
        total = sum(adjoint(k) @ k for k in ops)
        if np.abs(total - I2).max() > eps:
            raise ChannelError("completeness violated: sum K^* K != I")
        self.kraus = tuple(k.copy() for k in ops)
        for k in self.kraus:
            k.setflags(write=False)

    def __len__(self) -> int:
        return len(self.kraus)


def _pattern_incoherent(k: np.ndarray) -> bool:
    """At most one nonzero entry per column."""
    nz = np.abs(k) >= NULL_THRESHOLD
    return bool(np.all(nz.sum(axis=0) <= 1))


def _pattern_strictly_incoherent(k: np.ndarray) -> bool:
    """At most one nonzero entry per column and per row: diagonal,
    antidiagonal, or a single entry."""
    nz = np.abs(k) >= NULL_THRESHOLD
    return bool(np.all(nz.sum(axis=0) <= 1) and np.all(nz.sum(axis=1) <= 1))


def classify(ch: KrausChannel, eps: float = EPS) -> ChannelClass:
    """Classification flags from entry patterns and operator sums."""
    tp = np.abs(sum(adjoint(k) @ k for k in ch.kraus) - I2).max() <= eps
    bist = np.abs(sum(k @ adjoint(k) for k in ch.kraus) - I2).max() <= eps
    inc = all(_pattern_incoherent(k) for k in ch.kraus)
    sio = all(_pattern_strictly_incoherent(k) for k in ch.kraus)
    return ChannelClass(trace_preserving=bool(tp), incoherent=inc,
                        strictly_incoherent=sio, bistochastic=bool(bist))


def kraus_apply(ch: KrausChannel, mat) -> np.ndarray:
    """sum_j K_j A K_j^* on an arbitrary 2x2 matrix."""
    mat = as_mat2(mat)
    out = np.zeros((2, 2), dtype=np.complex128)
    for k in ch.kraus:
        out += k @ mat @ adjoint(k)
    return out


def apply(ch: KrausChannel, rho) -> np.ndarray:
    """Apply the channel to a density matrix; output is again a valid state."""
    rho = check_density(rho)
    out = kraus_apply(ch, rho)
    # Kraus conjugation preserves Hermiticity exactly; symmetrize round-off
    return 0.5 * (out + adjoint(out))


def apply_dual(ch: KrausChannel, mat) -> np.ndarray:
    """Heisenberg dual Phi^*(A) = sum_j K_j^* A K_j, satisfying
    tr[Phi^*(A) B] = tr[A Phi(B)]."""
    mat = as_mat2(mat)
    out = np.zeros((2, 2), dtype=np.complex128)
    for k in ch.kraus:
        out += adjoint(k) @ mat @ k
    return out


def transfer_params(ch: KrausChannel, eps: float = EPS) -> TransferParams:
    """Extract (a, b, c, d, z) from the channel's action on the Pauli basis.

    Requires a bistochastic strictly incoherent channel and verifies that
    the representation really is block diagonal: images of sigma1, sigma2
    stay in span{sigma1, sigma2} and the image of sigma3 stays on the
    sigma3 axis.
    """
    cls = classify(ch, eps)
    if not cls.bistochastic:
        raise ClassificationError("channel is not bistochastic")
    if not cls.strictly_incoherent:
        raise ClassificationError("channel is not strictly incoherent")

    # coords[i, j] = tr(sigma_i Phi(sigma_j)) / 2
    images = [kraus_apply(ch, s) for s in PAULIS]
    coords = np.array([[0.5 * np.trace(s @ img).real for img in images]
                       for s in PAULIS])
    resid = max(
        abs(coords[2, 0]), abs(coords[2, 1]),          # sigma3 leakage
        abs(coords[0, 2]), abs(coords[1, 2]),          # into sigma3 image
        max(abs(np.trace(img).real) / 2 for img in images),  # I component
    )
    if resid >= eps:
        raise StructureViolationError(
            f"transfer matrix is not block diagonal (residual {resid:.3e})")
    return TransferParams(a=coords[0, 0], b=coords[1, 0],
                          c=coords[0, 1], d=coords[1, 1], z=coords[2, 2])


def builtin(name: str, q: float, theta: float | None = None) -> KrausChannel:
    """Builtin channel families.

    bit-flip / bit-phase-flip / phase-flip: {sqrt(1 - q/2) I, sqrt(q/2) sigma_k}
    for k = 1, 2, 3.  depolarizing: {sqrt(1 - 3q/4) I, sqrt(q/4) sigma_i}.
    f1-theta: the bit-flip family with a relative phase theta on the Kraus
    coefficients (requires theta; reduces to bit-flip at theta = 0).
    """
    if name not in BUILTIN_NAMES:
        raise ValueError(f"unknown builtin channel {name!r}")
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q = {q} outside [0, 1]")
    if name == "f1-theta":
        if theta is None:
            raise ValueError("f1-theta requires theta")
        lo = np.sqrt(1 - q / 2)
        hi = np.sqrt(q / 2)
        ph = np.exp(1j * theta)
        return KrausChannel([
            np.array([[lo, 0], [0, lo * ph]]),
            np.array([[0, hi * ph], [hi, 0]]),
        ])
    if theta is not None:
        raise ValueError(f"{name} takes no theta")
    if name == "depolarizing":
        ops = [np.sqrt(1 - 3 * q / 4) * I2]
        ops += [np.sqrt(q / 4) * s for s in PAULIS]
        return KrausChannel(ops)
    k = {"bit-flip": SIGMA1, "bit-phase-flip": SIGMA2, "phase-flip": SIGMA3}[name]
    return KrausChannel([np.sqrt(1 - q / 2) * I2, np.sqrt(q / 2) * k])
