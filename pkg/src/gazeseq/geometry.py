"""Gaze geometry: 2D spherical angles, 3D direction vectors, mirroring.

Conventions used throughout the package:

* Gaze is stored as (yaw, pitch) in degrees.  Positive yaw points to the
  subject's left-to-right direction, positive pitch points up.
* The 3D frame is x right, y up, z forward (out of the eye).  Only
  internal consistency matters; nothing downstream depends on the
  handedness choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GazeAngles",
    "angles_to_vector",
    "vector_to_angles",
    "mirror_angles",
    "as_angle_array",
]


@dataclass(frozen=True)
class GazeAngles:
    """Gaze direction as (yaw, pitch) in degrees.

    Ground-truth data is generated within +/-90 deg on both axes; model
    outputs are unclamped and may fall outside that range.
    """

    yaw_deg: float
    pitch_deg: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.yaw_deg) and math.isfinite(self.pitch_deg)):
            raise ValueError(f"gaze angles must be finite, got {self}")

    def as_tuple(self) -> tuple[float, float]:
        return (self.yaw_deg, self.pitch_deg)


def angles_to_vector(a: GazeAngles) -> np.ndarray:
    """Unit 3D gaze direction for spherical angles ``a``.

    Returns (cos(pitch)*sin(yaw), sin(pitch), cos(pitch)*cos(yaw)).
    """
    yaw = math.radians(a.yaw_deg)
    pitch = math.radians(a.pitch_deg)
    cp = math.cos(pitch)
    return np.array([cp * math.sin(yaw), math.sin(pitch), cp * math.cos(yaw)])


def vector_to_angles(v: Sequence[float] | np.ndarray) -> GazeAngles:
    """Inverse of :func:`angles_to_vector` on the front hemisphere.

    Raises ValueError for the zero vector.  Accepts unnormalized input.
    """
    x, y, z = (float(c) for c in v)
    norm = math.sqrt(x * x + y * y + z * z)
    if norm == 0.0:
        raise ValueError("cannot extract gaze angles from the zero vector")
    pitch = math.degrees(math.asin(max(-1.0, min(1.0, y / norm))))
    yaw = math.degrees(math.atan2(x, z))
    return GazeAngles(yaw, pitch)


def mirror_angles(a: GazeAngles) -> GazeAngles:
    """Horizontal flip: yaw negated, pitch unchanged."""
    return GazeAngles(-a.yaw_deg, a.pitch_deg)


def as_angle_array(angles: Iterable[GazeAngles] | np.ndarray) -> np.ndarray:
    """Coerce a sequence of :class:`GazeAngles` (or an (N, 2) array) to float64 (N, 2)."""
    if isinstance(angles, np.ndarray):
        arr = np.asarray(angles, dtype=np.float64)
    else:
        arr = np.array([a.as_tuple() for a in angles], dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected shape (N, 2), got {arr.shape}")
    return arr
