"""The four-operator parameterization of a single-qubit SIO and its
Pauli/phase-operator mixture decompositions.

A typical form is the Kraus family

    {diag(a1, b1), antidiag(b2; a2), [[a3, 0], [0, 0]], [[0, 0], [a4, 0]]}

with real a_i and complex b_i, normalized so that sum a_i^2 = |b1|^2 +
|b2|^2 = 1 and, for bistochastic channels, a1^2 + a3^2 + |b2|^2 =
a2^2 + a4^2 + |b1|^2 = 1.  The channel's Bloch action is determined by the
five reals (a, b, c, d, z) with a + bi = a1 b1 + a2 conj(b2),
c + di = (a1 b1 - a2 conj(b2)) i and z = |b1|^2 - |b2|^2.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .channel import KrausChannel, TransferParams
from .linalg import EPS, I2, PHASE_S, SIGMA1, SIGMA2, SIGMA3, adjoint, as_mat2


class InvalidParametersError(ValueError):
    """Typical-form parameters violate the normalization constraints."""


class NotApplicableError(ValueError):
    """Theorem-3 decomposition requested for non-real b parameters."""


class InfeasibleError(ValueError):
    """No bistochastic SIO realizes the requested transfer parameters."""


@dataclass(frozen=True)
class TypicalForm:
    """Parameters (a1, a2, a3, a4, b1, b2) of the four-operator family.

    a_i are canonicalized to be nonnegative at construction; a sign on a1
    or a2 is absorbed into the phase of the paired b (a global Kraus phase),
    a sign on a3 or a4 is itself a global phase.
    """
    a1: float
    a2: float
    a3: float
    a4: float
    b1: complex
    b2: complex

    def __post_init__(self):
        vals = [self.a1, self.a2, self.a3, self.a4, self.b1, self.b2]
        if not all(np.isfinite(complex(v).real) and np.isfinite(complex(v).imag)
                   for v in vals):
            raise InvalidParametersError("non-finite typical-form parameter")
        a1, a2, a3, a4 = self.a1, self.a2, self.a3, self.a4
        b1, b2 = complex(self.b1), complex(self.b2)
        if a1 < 0:
            a1, b1 = -a1, -b1
        if a2 < 0:
            a2, b2 = -a2, -b2
        a3, a4 = abs(a3), abs(a4)
        object.__setattr__(self, "a1", float(a1))
        object.__setattr__(self, "a2", float(a2))
        object.__setattr__(self, "a3", float(a3))
        object.__setattr__(self, "a4", float(a4))
        object.__setattr__(self, "b1", b1)
        object.__setattr__(self, "b2", b2)

        asq = a1**2 + a2**2 + a3**2 + a4**2
        bsq = abs(b1)**2 + abs(b2)**2
        if abs(asq - 1) > EPS or abs(bsq - 1) > EPS:
            raise InvalidParametersError(
                f"normalization violated: sum a_i^2 = {asq}, sum |b_i|^2 = {bsq}")
        if abs(a1**2 + a3**2 + abs(b2)**2 - 1) > EPS:
            raise InvalidParametersError(
                "bistochastic constraint a1^2 + a3^2 + |b2|^2 = 1 violated")
        if abs(a2**2 + a4**2 + abs(b1)**2 - 1) > EPS:
            raise InvalidParametersError(
                "bistochastic constraint a2^2 + a4^2 + |b1|^2 = 1 violated")


@dataclass(frozen=True)
class MixtureDecomposition:
    """Coefficients of the nine-term operator mixture

        Phi(rho) = c_I I + c_id rho + c_S S rho S* + c_Sstar S* rho S
                 + c_s1 s1 rho s1 + c_s2 s2 rho s2 + c_s3 s3 rho s3
                 + c_Ss1 S s1 rho s1 S* + c_Sstars2 S* s2 rho s2 S.

    This is a linear combination: coefficients may be negative.
    """
    c_I: float
    c_id: float
    c_S: float
    c_Sstar: float
    c_s1: float
    c_s2: float
    c_s3: float
    c_Ss1: float
    c_Sstars2: float

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def apply(self, rho) -> np.ndarray:
        """Evaluate the mixture on a 2x2 matrix."""
        rho = as_mat2(rho)
        S, Sd = PHASE_S, adjoint(PHASE_S)
        out = self.c_I * I2 + self.c_id * rho
        out += self.c_S * (S @ rho @ Sd) + self.c_Sstar * (Sd @ rho @ S)
        out += self.c_s1 * (SIGMA1 @ rho @ SIGMA1)
        out += self.c_s2 * (SIGMA2 @ rho @ SIGMA2)
        out += self.c_s3 * (SIGMA3 @ rho @ SIGMA3)
        out += self.c_Ss1 * (S @ SIGMA1 @ rho @ SIGMA1 @ Sd)
        out += self.c_Sstars2 * (Sd @ SIGMA2 @ rho @ SIGMA2 @ S)
        return out


def to_kraus(tf: TypicalForm) -> KrausChannel:
    """Build the Kraus channel of a typical form (zero operators dropped)."""
    return KrausChannel([
        np.array([[tf.a1, 0], [0, tf.b1]]),
        np.array([[0, tf.b2], [tf.a2, 0]]),
        np.array([[tf.a3, 0], [0, 0]], dtype=np.complex128),
        np.array([[0, 0], [tf.a4, 0]], dtype=np.complex128),
    ])


def abcd(tf: TypicalForm) -> TransferParams:
    """Transfer parameters from a + bi = a1 b1 + a2 conj(b2),
    c + di = (a1 b1 - a2 conj(b2)) i, z = |b1|^2 - |b2|^2."""
    p = tf.a1 * tf.b1 + tf.a2 * np.conj(tf.b2)
    w = (tf.a1 * tf.b1 - tf.a2 * np.conj(tf.b2)) * 1j
    return TransferParams(a=p.real, b=p.imag, c=w.real, d=w.imag,
                          z=abs(tf.b1)**2 - abs(tf.b2)**2)


def _mixture_from_transfer(tp: TransferParams) -> MixtureDecomposition:
    a, b, c, d, z = tp.a, tp.b, tp.c, tp.d, tp.z
    return MixtureDecomposition(
        c_I=0.5 * (1 - a - b - c - d - z),
        c_id=0.5 * (a + d + z),
        c_S=0.5 * b,
        c_Sstar=0.5 * c,
        c_s1=0.5 * a,
        c_s2=0.5 * d,
        c_s3=0.5 * z,
        c_Ss1=0.5 * b,
        c_Sstars2=0.5 * c,
    )


def decompose_theorem1(tf: TypicalForm) -> MixtureDecomposition:
    """Full nine-term mixture; reproduces the Kraus action for every state."""
    return _mixture_from_transfer(abcd(tf))


def decompose_theorem3(tf: TypicalForm) -> MixtureDecomposition:
    """Pauli-only mixture, valid when b1 and b2 are real: all phase-operator
    coefficients vanish and the decomposition reduces to five terms.

    Computed in real arithmetic from a = a1 b1 + a2 b2, d = a1 b1 - a2 b2,
    independently of the complex route in decompose_theorem1.
    """
    if abs(complex(tf.b1).imag) > EPS or abs(complex(tf.b2).imag) > EPS:
        raise NotApplicableError(
            "Pauli-only decomposition needs real b1, b2")
    b1, b2 = complex(tf.b1).real, complex(tf.b2).real
    a = tf.a1 * b1 + tf.a2 * b2
    d = tf.a1 * b1 - tf.a2 * b2
    z = b1**2 - b2**2
    return MixtureDecomposition(
        c_I=0.5 * (1 - a - d - z),
        c_id=0.5 * (a + d + z),
        c_S=0.0, c_Sstar=0.0,
        c_s1=0.5 * a, c_s2=0.5 * d, c_s3=0.5 * z,
        c_Ss1=0.0, c_Sstars2=0.0,
    )


def synthesize(tp: TransferParams, eps: float = EPS) -> TypicalForm:
    """Construct a typical form realizing the given transfer parameters.

    The map typical form -> transfer parameters is many-to-one; this picks
    the representative with |b1|^2 = (1 + z)/2 and phases carried entirely
    by b1, b2.  Raises InfeasibleError when no bistochastic SIO has these
    parameters (|a1 b1| may not exceed |b1|^2, and likewise for the
    antidiagonal pair).
    """
    m1sq = (1 + tp.z) / 2
    m2sq = (1 - tp.z) / 2
    p = complex(tp.a + tp.d, tp.b - tp.c) / 2   # a1 b1
    r = complex(tp.a - tp.d, tp.b + tp.c) / 2   # a2 conj(b2)

    if abs(p) > m1sq + eps:
        raise InfeasibleError(
            f"|p| = {abs(p):.6g} exceeds |b1|^2 = {m1sq:.6g}")
    if abs(r) > m2sq + eps:
        raise InfeasibleError(
            f"|r| = {abs(r):.6g} exceeds |b2|^2 = {m2sq:.6g}")

    m1, m2 = np.sqrt(m1sq), np.sqrt(m2sq)
    # at z = +/-1 one of b1, b2 vanishes; the matching product must too
    # (its magnitude is already within eps by the bound checks above)
    if m1sq <= eps or abs(p) == 0:
        a1, b1 = 0.0, complex(m1)
    else:
        a1 = min(abs(p) / m1, m1)
        b1 = m1 * p / abs(p)
    if m2sq <= eps or abs(r) == 0:
        a2, b2 = 0.0, complex(m2)
    else:
        a2 = min(abs(r) / m2, m2)
        b2 = m2 * np.conj(r) / abs(r)
    a3 = np.sqrt(max(1 - m2sq - a1**2, 0.0))
    a4 = np.sqrt(max(1 - m1sq - a2**2, 0.0))
    return TypicalForm(a1=a1, a2=a2, a3=a3, a4=a4, b1=b1, b2=b2)


def random_typical_form(rng: np.random.Generator) -> TypicalForm:
    """Sample a uniformly parameterized valid bistochastic typical form."""
    z = rng.uniform(-1, 1)
    m1, m2 = np.sqrt((1 + z) / 2), np.sqrt((1 - z) / 2)
    t1, t2 = rng.uniform(0, 1, size=2)
    ph1, ph2 = rng.uniform(0, 2 * np.pi, size=2)
    return TypicalForm(
        a1=t1 * m1, a3=m1 * np.sqrt(1 - t1**2),
        a2=t2 * m2, a4=m2 * np.sqrt(1 - t2**2),
        b1=m1 * np.exp(1j * ph1), b2=m2 * np.exp(1j * ph2),
    )


def random_real_typical_form(rng: np.random.Generator) -> TypicalForm:
    """Like random_typical_form but with real b1, b2 (random signs)."""
    tf = random_typical_form(rng)
    s1, s2 = rng.choice([-1.0, 1.0], size=2)
    return TypicalForm(a1=tf.a1, a2=tf.a2, a3=tf.a3, a4=tf.a4,
                      b1=s1 * abs(tf.b1), b2=s2 * abs(tf.b2))
