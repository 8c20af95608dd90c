"""Relativistic kinematics: rapidities, Wigner rotation angles, spin rotations.

The physical setup: three particles with equal-magnitude momenta along
fixed directions (default: coplanar at azimuths 0/120/240 degrees), seen
by an observer boosted along an axis perpendicular to that plane
(default +z).  Composing the observer boost with a particle boost is
not a pure boost — the spin of each particle picks up a momentum-
dependent rotation (Wigner rotation) about the axis perpendicular to
both boosts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import ATOL_PHYSICS, ID2, MOMENTUM_LABELS, PAULI_X, PAULI_Y, PAULI_Z
from .errors import InputError, ShapeError
from .linalg import kron

_AXIS_DEGENERATE = 1e-12


def rapidity(speed: float) -> float:
    """atanh(speed) for a speed in [0, 1) (units of c)."""
    speed = float(speed)
    if not 0.0 <= speed < 1.0:
        raise InputError(f"speed must lie in [0, 1), got {speed}")
    return math.atanh(speed)


def wigner_angle(eta: float, xi: float) -> float:
    """Rotation angle from composing perpendicular boosts of rapidity eta, xi.

    tan(angle) = sinh(eta) sinh(xi) / (cosh(eta) + cosh(xi)); the result
    lies in [0, pi/2), vanishes when either rapidity does, is symmetric
    in its arguments and approaches pi/2 in the ultrarelativistic limit.
    """
    eta = float(eta)
    xi = float(xi)
    if eta < 0.0 or xi < 0.0:
        raise InputError(f"rapidities must be nonnegative, got ({eta}, {xi})")
    return math.atan2(math.sinh(eta) * math.sinh(xi), math.cosh(eta) + math.cosh(xi))


def rotation_axis(boost_axis: np.ndarray, momentum_dir: np.ndarray) -> np.ndarray:
    """Unit Wigner-rotation axis: normalize(boost_axis x momentum_dir)."""
    b = np.asarray(boost_axis, dtype=float).reshape(3)
    p = np.asarray(momentum_dir, dtype=float).reshape(3)
    nb, npp = np.linalg.norm(b), np.linalg.norm(p)
    if nb < _AXIS_DEGENERATE or npp < _AXIS_DEGENERATE:
        raise InputError("boost axis and momentum direction must be nonzero")
    axis = np.cross(b / nb, p / npp)
    norm = np.linalg.norm(axis)
    if norm < _AXIS_DEGENERATE:
        raise InputError(
            "rotation axis degenerate: boost axis parallel to momentum direction"
        )
    return axis / norm


def spin_rotation(axis: np.ndarray, delta: float) -> np.ndarray:
    """SU(2) rotation by angle delta about a unit axis.

    U = cos(delta/2) I - i sin(delta/2) (axis . sigma); det U = 1.
    """
    n = np.asarray(axis, dtype=float).reshape(3)
    if abs(np.linalg.norm(n) - 1.0) > ATOL_PHYSICS:
        raise InputError("rotation axis must be a unit vector")
    ns = n[0] * PAULI_X + n[1] * PAULI_Y + n[2] * PAULI_Z
    return math.cos(delta / 2.0) * ID2 - 1j * math.sin(delta / 2.0) * ns


def _unit_rows(arr: np.ndarray, what: str) -> np.ndarray:
    arr = np.asarray(arr, dtype=float)
    norms = np.linalg.norm(arr, axis=-1)
    if np.any(norms < _AXIS_DEGENERATE):
        raise InputError(f"{what} must be nonzero")
    return arr / norms[..., None]


def default_directions() -> np.ndarray:
    """Unit momentum directions at azimuths 0, 120, 240 degrees in the x-y plane."""
    az = np.array([0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0])
    return np.stack([np.cos(az), np.sin(az), np.zeros(3)], axis=1)


@dataclass(frozen=True)
class MomentumGeometry:
    """Momentum directions (one unit row per label A/B/C), particle speed,
    and the observer's boost axis."""

    particle_speed: float
    directions: np.ndarray = field(default_factory=default_directions)
    boost_axis: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, 1.0]))

    def __post_init__(self):
        if not 0.0 <= self.particle_speed < 1.0:
            raise InputError(
                f"particle speed must lie in [0, 1), got {self.particle_speed}"
            )
        dirs = _unit_rows(self.directions, "momentum directions")
        if dirs.shape != (3, 3):
            raise ShapeError(f"directions must be (3, 3), got {dirs.shape}")
        axis = _unit_rows(self.boost_axis, "boost axis").reshape(3)
        object.__setattr__(self, "directions", dirs)
        object.__setattr__(self, "boost_axis", axis)

    def rotation_axes(self) -> np.ndarray:
        """Per-label Wigner rotation axes, shape (3, 3)."""
        return np.stack(
            [rotation_axis(self.boost_axis, d) for d in self.directions]
        )


def default_geometry(particle_speed: float = 0.8) -> MomentumGeometry:
    """The standard coplanar three-momentum geometry with boost along +z."""
    return MomentumGeometry(particle_speed=particle_speed)


@dataclass(frozen=True)
class BoostScenario:
    """A fixed Wigner angle plus the per-label rotation axes it acts about.

    Build from physical speeds (from_speeds) or directly from the angle
    (from_angle), which is how the sweep commands parameterize boosts.
    """

    delta: float
    axes: np.ndarray
    observer_speed: float | None = None
    geometry: MomentumGeometry | None = None

    def __post_init__(self):
        if not 0.0 <= self.delta <= math.pi / 2.0:
            raise InputError(f"delta must lie in [0, pi/2], got {self.delta}")
        axes = _unit_rows(self.axes, "rotation axes")
        if axes.shape != (3, 3):
            raise ShapeError(f"axes must be (3, 3), got {axes.shape}")
        object.__setattr__(self, "axes", axes)

    @classmethod
    def from_speeds(
        cls, observer_speed: float, geometry: MomentumGeometry | None = None
    ) -> "BoostScenario":
        if geometry is None:
            geometry = default_geometry()
        delta = wigner_angle(
            rapidity(observer_speed), rapidity(geometry.particle_speed)
        )
        return cls(
            delta=delta,
            axes=geometry.rotation_axes(),
            observer_speed=float(observer_speed),
            geometry=geometry,
        )

    @classmethod
    def from_angle(
        cls, delta: float, geometry: MomentumGeometry | None = None
    ) -> "BoostScenario":
        geo = geometry if geometry is not None else default_geometry()
        return cls(delta=float(delta), axes=geo.rotation_axes(), geometry=geo)

    def rotation(self, label: int | str) -> np.ndarray:
        """2x2 spin rotation for the particle carrying the given momentum label."""
        return spin_rotation(self.axes[momentum_label_index(label)], self.delta)


def momentum_label_index(label: int | str) -> int:
    """Normalize a momentum label ('A'/'B'/'C' or 0/1/2) to an index."""
    if isinstance(label, str):
        up = label.strip().upper()
        if up not in MOMENTUM_LABELS:
            raise InputError(f"unknown momentum label {label!r}")
        return MOMENTUM_LABELS.index(up)
    idx = int(label)
    if idx not in (0, 1, 2):
        raise InputError(f"momentum label index must be 0, 1 or 2, got {label}")
    return idx


def local_unitary(assignment, scenario: BoostScenario) -> np.ndarray:
    """8x8 spin rotation for particles carrying the given ordered momentum labels.

    `assignment` lists, per particle slot 1..3, which momentum label that
    particle carries; the result is the tensor product of the three
    single-particle Wigner rotations.
    """
    labels = [momentum_label_index(a) for a in assignment]
    if len(labels) != 3:
        raise InputError(f"assignment must name three labels, got {assignment!r}")
    return kron([scenario.rotation(p) for p in labels])
