"""Discrete-time dynamics of a bistochastic SIO: eigenvalue analysis of the
Bloch-block, the relaxing criterion (all orbits converge to the maximally
mixed state), closed-form n-th powers split by discriminant sign, and orbit
recording.
"""

from __future__ import annotations

import enum
import io
from dataclasses import dataclass

import numpy as np

from .channel import KrausChannel, TransferParams, apply
from .linalg import I2, check_density, density_to_bloch, trace_distance

# strict-inequality margin: |lambda| or |z| within this of 1 counts as 1
EPS_STRICT = 1e-9
# discriminant magnitude below which the repeated-eigenvalue formula is used
DISC_THRESHOLD = 1e-12

MAX_TRAJECTORY_STEPS = 10**6


class DiscriminantCase(enum.Enum):
    DISTINCT_REAL = "distinct-real"
    REPEATED = "repeated"
    COMPLEX_PAIR = "complex-pair"


@dataclass(frozen=True)
class RelaxingReport:
    """Spectral data of the Bloch block and the relaxing verdict.

    The channel is relaxing (every orbit converges to I/2 in trace norm)
    iff both block eigenvalues have modulus < 1 and |z| < 1; the latter is
    equivalent to b1 b2 != 0 in any typical-form representation.
    """
    lambda1: complex
    lambda2: complex
    mod1: float
    mod2: float
    z: float
    b1b2_nonzero: bool
    relaxing: bool
    case: DiscriminantCase


def _discriminant_case(disc: float) -> DiscriminantCase:
    if disc > DISC_THRESHOLD:
        return DiscriminantCase.DISTINCT_REAL
    if disc < -DISC_THRESHOLD:
        return DiscriminantCase.COMPLEX_PAIR
    return DiscriminantCase.REPEATED


def block_eigenvalues(tp: TransferParams) -> tuple[complex, complex, float, DiscriminantCase]:
    """Eigenvalues of the Bloch block by the quadratic formula, plus the
    discriminant (a - d)^2 + 4bc and its case.  For the complex case
    lambda1 is the root with positive imaginary part."""
    disc = (tp.a - tp.d) ** 2 + 4 * tp.b * tp.c
    mean = 0.5 * (tp.a + tp.d)
    case = _discriminant_case(disc)
    if case is DiscriminantCase.COMPLEX_PAIR:
        half = 0.5 * np.sqrt(-disc)
        lam1 = complex(mean, half)
        lam2 = complex(mean, -half)
    else:
        half = 0.5 * np.sqrt(max(disc, 0.0))
        lam1 = complex(mean + half)
        lam2 = complex(mean - half)
    return lam1, lam2, disc, case


def relaxing_report(tp: TransferParams) -> RelaxingReport:
    """Spectral report and relaxing verdict for a bistochastic SIO."""
    lam1, lam2, _, case = block_eigenvalues(tp)
    mod1, mod2 = abs(lam1), abs(lam2)
    z_interior = abs(tp.z) < 1.0 - EPS_STRICT
    relaxing = (mod1 < 1.0 - EPS_STRICT and mod2 < 1.0 - EPS_STRICT
                and z_interior)
    return RelaxingReport(lambda1=lam1, lambda2=lam2, mod1=mod1, mod2=mod2,
                          z=tp.z, b1b2_nonzero=z_interior, relaxing=relaxing,
                          case=case)


def power_closed_form(tp: TransferParams, n: int) -> TransferParams:
    """Transfer parameters of the n-th channel power, in closed form.

    The Bloch block of Phi^n is evaluated by one of three formulas keyed on
    the discriminant: distinct real eigenvalues use ratios of eigenvalue
    powers, a (near-)repeated eigenvalue uses the confluent limit, and a
    complex pair uses modulus-argument form with sin(n theta)/sin(theta)
    factors.  The sigma3 component is z^n in every case.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return TransferParams.identity()
    a, b, c, d = tp.a, tp.b, tp.c, tp.d
    lam1, lam2, _, case = block_eigenvalues(tp)

    if case is DiscriminantCase.DISTINCT_REAL:
        l1, l2 = lam1.real, lam2.real
        s_n = _real_power_ratio(l1, l2, n)
        s_n1 = _real_power_ratio(l1, l2, n + 1)
    elif case is DiscriminantCase.REPEATED:
        lam = 0.5 * (a + d)
        s_n = n * _safe_pow(lam, n - 1)
        s_n1 = (n + 1) * _safe_pow(lam, n)
    else:
        m = np.sqrt(a * d - b * c)  # = |lambda_1|, positive since disc < 0
        theta = np.angle(lam1)
        s_n = _safe_pow(m, n - 1) * np.sin(n * theta) / np.sin(theta)
        s_n1 = _safe_pow(m, n) * np.sin((n + 1) * theta) / np.sin(theta)

    # M^n = [[s_{n+1} - d s_n, c s_n], [b s_n, s_{n+1} - a s_n]]
    return TransferParams(a=s_n1 - d * s_n, b=b * s_n,
                          c=c * s_n, d=s_n1 - a * s_n,
                          z=_safe_pow(tp.z, n))


def _safe_pow(x: float, n: int) -> float:
    """x^n with graceful underflow to 0 (no spurious overflow warnings)."""
    if n == 0:
        return 1.0
    if x == 0.0:
        return 0.0
    sign = -1.0 if (x < 0 and n % 2) else 1.0
    logmag = n * np.log(abs(x))
    if logmag < -745.0:  # below smallest subnormal
        return 0.0
    return sign * np.exp(logmag)


def _real_power_ratio(l1: float, l2: float, n: int) -> float:
    """(l1^n - l2^n) / (l1 - l2) for distinct reals."""
    return (_safe_pow(l1, n) - _safe_pow(l2, n)) / (l1 - l2)


def iterate_oracle(ch: KrausChannel, rho, n: int) -> np.ndarray:
    """n-fold channel application; the reference against which closed-form
    powers are checked."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rho = check_density(rho)
    for _ in range(n):
        rho = apply(ch, rho)
    return rho


@dataclass(frozen=True)
class Trajectory:
    """Orbit of an initial state: states[k] = Phi^k(rho0) and the trace
    distance of each to the maximally mixed state."""
    states: tuple
    distances: tuple

    def __len__(self) -> int:
        return len(self.states)

    def to_csv(self) -> str:
        """CSV export: step,distance,rx,ry,rz with 17 significant digits."""
        buf = io.StringIO()
        buf.write("step,distance,rx,ry,rz\n")
        for k, (rho, dist) in enumerate(zip(self.states, self.distances)):
            r = density_to_bloch(rho)
            buf.write(f"{k},{dist:.17g},{r[0]:.17g},{r[1]:.17g},{r[2]:.17g}\n")
        return buf.getvalue()


def trajectory(ch: KrausChannel, rho0, steps: int) -> Trajectory:
    """Record Phi^k(rho0) for k = 0..steps together with distances to I/2."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if steps > MAX_TRAJECTORY_STEPS:
        raise ValueError(f"steps > {MAX_TRAJECTORY_STEPS} not supported")
    rho = check_density(rho0)
    half_i = 0.5 * I2
    states = [rho]
    distances = [trace_distance(rho, half_i)]
    for _ in range(steps):
        rho = apply(ch, rho)
        states.append(rho)
        distances.append(trace_distance(rho, half_i))
    return Trajectory(states=tuple(states), distances=tuple(distances))
