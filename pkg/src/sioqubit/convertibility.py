"""Bloch-vector convertibility under stochastic SIOs.

A state with Bloch vector r can reach s by stochastic SIO iff s lies in a
cylinder of radius sqrt(rx^2 + ry^2) and half-height |rz|; restricting to
Pauli-form (real-parameter) SIOs shrinks the reachable set to the cuboid
with half-extents (|rx|, |ry|, |rz|).  Neither region contains the other,
so the two operation classes have genuinely different converting power.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .linalg import check_bloch

# slack on each inequality: the criteria are closed conditions, boundary
# conversions count as convertible
SLACK = 1e-9


class RegionKind(enum.Enum):
    CYLINDER = "cylinder"
    CUBOID = "cuboid"


@dataclass(frozen=True)
class ImageRegion:
    """Reachable region of a Bloch vector under stochastic SIOs.

    Cylinder: params = (radius, half_height); cuboid: params = half-extents
    (|rx|, |ry|, |rz|).
    """
    kind: RegionKind
    params: tuple[float, ...]

    def contains(self, s) -> bool:
        s = check_bloch(s)
        if self.kind is RegionKind.CYLINDER:
            radius, half_height = self.params
            return bool(np.hypot(s[0], s[1]) <= radius + SLACK
                        and abs(s[2]) <= half_height + SLACK)
        return all(bool(abs(si) <= ei + SLACK)
                   for si, ei in zip(s, self.params))


def convertible_sio(r, s) -> bool:
    """Can r reach s by a stochastic SIO?  True iff
    sx^2 + sy^2 <= rx^2 + ry^2 and |sz| <= |rz|."""
    r, s = check_bloch(r), check_bloch(s)
    return bool(s[0]**2 + s[1]**2 <= r[0]**2 + r[1]**2 + SLACK
                and abs(s[2]) <= abs(r[2]) + SLACK)


def convertible_pauli_sio(r, s) -> bool:
    """Can r reach s by a Pauli-form (real-parameter) stochastic SIO?
    True iff |si| <= |ri| componentwise."""
    r, s = check_bloch(r), check_bloch(s)
    return all(bool(abs(si) <= abs(ri) + SLACK) for si, ri in zip(s, r))


def image_region(r, pauli_only: bool = False) -> ImageRegion:
    """Reachable region descriptor; membership agrees with the matching
    convertible predicate."""
    r = check_bloch(r)
    if pauli_only:
        return ImageRegion(RegionKind.CUBOID,
                           (abs(r[0]), abs(r[1]), abs(r[2])))
    return ImageRegion(RegionKind.CYLINDER,
                       (float(np.hypot(r[0], r[1])), abs(r[2])))
