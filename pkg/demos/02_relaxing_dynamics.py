"""Which channels drive every state to the maximally mixed state?

A bistochastic SIO is relaxing when repeated application sends every input
to I/2 in trace norm.  The verdict is spectral: both eigenvalues of the
2x2 Bloch block must have modulus < 1 and |z| < 1.  The flip channels keep
a protected direction and never relax; depolarizing always does; the
phase-twisted bit-flip family switches between the two as the twist angle
varies.  The closed-form channel powers let us confirm the verdicts
without iterating.
"""

import numpy as np

from sioqubit import (
    bloch_to_density,
    builtin,
    power_closed_form,
    relaxing_report,
    trajectory,
    transfer_params,
)

q = 0.5

print("=== Spectral verdicts ===")
for name in ("bit-flip", "phase-flip", "depolarizing"):
    rep = relaxing_report(transfer_params(builtin(name, q)))
    print(f"{name:>13}: |lambda| = ({rep.mod1:.3f}, {rep.mod2:.3f}), "
          f"z = {rep.z:+.3f}  ->  relaxing = {rep.relaxing}")

print()
print("=== The twist angle decides ===")
for theta in (0.0, np.pi / 6, np.pi / 2, np.pi):
    rep = relaxing_report(transfer_params(builtin("f1-theta", q, theta)))
    print(f"theta = {theta:5.3f}: case {rep.case.value:>13}, "
          f"relaxing = {rep.relaxing}  (|cos theta| = {abs(np.cos(theta)):.3f})")

print()
print("=== Orbits confirm the verdicts ===")
rho0 = bloch_to_density([1, 0, 0])
for name, ch in [("bit-flip", builtin("bit-flip", q)),
                 ("f1-theta pi/2", builtin("f1-theta", q, np.pi / 2))]:
    traj = trajectory(ch, rho0, 40)
    picks = [0, 10, 20, 40]
    dists = ", ".join(f"n={n}: {traj.distances[n]:.2e}" for n in picks)
    print(f"{name:>14} distance to I/2 along the orbit: {dists}")

print()
print("=== Closed-form powers vs iterated multiplication ===")
tp = transfer_params(builtin("f1-theta", 0.5, np.pi / 3))
block = tp.block()
for n in (10, 50):
    cf = power_closed_form(tp, n).block()
    ref = np.linalg.matrix_power(block, n)
    print(f"n = {n:3d}: max |closed-form - iterated| = "
          f"{np.abs(cf - ref).max():.2e}")
