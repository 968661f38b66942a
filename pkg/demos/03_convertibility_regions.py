"""Where can a qubit state go under stochastic SIOs?

The reachable set of a Bloch vector r under general stochastic SIOs is a
cylinder (radius sqrt(rx^2 + ry^2), half-height |rz|); restricting to
Pauli-representable SIOs shrinks it to the cuboid with half-extents
(|rx|, |ry|, |rz|).  The cuboid sits strictly inside the cylinder, so the
two operation classes have different converting power: rotating coherence
from the x-axis to the y-axis is free for general SIOs but impossible in
the Pauli-only class.
"""

import numpy as np

from sioqubit import (
    convertible_pauli_sio,
    convertible_sio,
    image_region,
)

r = np.array([0.6, 0.4, 0.3])
print(f"source Bloch vector r = {r}")
print(f"cylinder: {image_region(r)}")
print(f"cuboid:   {image_region(r, pauli_only=True)}")
print()

targets = {
    "shrink in place": np.array([0.3, 0.0, 0.1]),
    "rotate xy-coherence": np.array([0.0, 0.6, 0.3]),
    "grow z": np.array([0.0, 0.0, 0.5]),
}
for label, s in targets.items():
    print(f"{label:>22} -> s = {s}: "
          f"general SIO {convertible_sio(r, s)}, "
          f"Pauli-only {convertible_pauli_sio(r, s)}")

print()
print("Monte-Carlo volume of the two regions inside the unit ball:")
rng = np.random.default_rng(0)
pts = rng.uniform(-1, 1, (200_000, 3))
pts = pts[np.linalg.norm(pts, axis=1) <= 1]
cyl = image_region(r)
cub = image_region(r, pauli_only=True)
in_cyl = np.array([cyl.contains(p) for p in pts[:20_000]])
in_cub = np.array([cub.contains(p) for p in pts[:20_000]])
ball_volume = 4 / 3 * np.pi
print(f"  cylinder fraction: {in_cyl.mean():.3f} "
      f"(~{in_cyl.mean() * ball_volume:.3f} volume units)")
print(f"  cuboid fraction:   {in_cub.mean():.3f} "
      f"(~{in_cub.mean() * ball_volume:.3f} volume units)")
print("  every cuboid point is also a cylinder point:",
      bool(np.all(~in_cub | in_cyl)))
