"""Per-subject appearance parameters for the synthetic eye renderer."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FRAME_HEIGHT = 100
FRAME_WIDTH = 160

# sampling ranges for sample_subject (uniform on each interval)
_RANGES = {
    "iris_radius_px": (16.0, 24.0),
    "pupil_to_iris_ratio": (0.35, 0.55),
    "sclera_intensity": (170.0, 230.0),
    "iris_intensity": (60.0, 110.0),
    "skin_intensity": (110.0, 160.0),
    "eyelid_aperture_px": (52.0, 72.0),
    "eye_center_offset_px": (-6.0, 6.0),
    "gain_per_degree_px": (1.8, 2.2),
}


@dataclass(frozen=True)
class SubjectAppearance:
    """Geometric and photometric parameters of one synthetic subject.

    ``gain_per_degree_px`` is the iris displacement in pixels per degree
    of yaw/pitch; ``eye_center_offset_px`` shifts the whole eye relative
    to the frame center (x, y in pixels).
    """

    subject_id: int
    iris_radius_px: float
    pupil_to_iris_ratio: float
    sclera_intensity: float
    iris_intensity: float
    skin_intensity: float
    eyelid_aperture_px: float
    eye_center_offset_px: tuple[float, float]
    gain_per_degree_px: tuple[float, float]
    glints_enabled: bool
    seed: int

    def __post_init__(self) -> None:
        if not 0.0 < self.pupil_to_iris_ratio < 1.0:
            raise ValueError(f"pupil/iris ratio must be in (0, 1), got {self.pupil_to_iris_ratio}")
        for name in ("sclera_intensity", "iris_intensity", "skin_intensity"):
            v = getattr(self, name)
            if not 0.0 <= v <= 255.0:
                raise ValueError(f"{name} outside [0, 255]: {v}")
        if self.eyelid_aperture_px <= 0:
            raise ValueError("eyelid aperture must be positive")
        # the iris disc must fit inside the frame at gaze (0, 0)
        cx = FRAME_WIDTH / 2.0 + self.eye_center_offset_px[0]
        cy = FRAME_HEIGHT / 2.0 + self.eye_center_offset_px[1]
        r = self.iris_radius_px
        if cx - r < 0 or cx + r > FRAME_WIDTH - 1 or cy - r < 0 or cy + r > FRAME_HEIGHT - 1:
            raise ValueError("iris does not fit inside the frame at the primary position")


def sample_subject(subject_id: int, rng_seed: int, glints_enabled: bool = False) -> SubjectAppearance:
    """Draw one subject's appearance, deterministic in (subject_id, rng_seed)."""
    rng = np.random.default_rng([int(rng_seed), int(subject_id), 0x5EED])
    # draw order is part of the determinism contract; do not reorder
    iris_radius = rng.uniform(*_RANGES["iris_radius_px"])
    pupil_ratio = rng.uniform(*_RANGES["pupil_to_iris_ratio"])
    sclera = rng.uniform(*_RANGES["sclera_intensity"])
    iris_i = rng.uniform(*_RANGES["iris_intensity"])
    skin = rng.uniform(*_RANGES["skin_intensity"])
    aperture = rng.uniform(*_RANGES["eyelid_aperture_px"])
    off = rng.uniform(*_RANGES["eye_center_offset_px"], size=2)
    gain = rng.uniform(*_RANGES["gain_per_degree_px"], size=2)
    return SubjectAppearance(
        subject_id=int(subject_id),
        iris_radius_px=float(iris_radius),
        pupil_to_iris_ratio=float(pupil_ratio),
        sclera_intensity=float(sclera),
        iris_intensity=float(iris_i),
        skin_intensity=float(skin),
        eyelid_aperture_px=float(aperture),
        eye_center_offset_px=(float(off[0]), float(off[1])),
        gain_per_degree_px=(float(gain[0]), float(gain[1])),
        glints_enabled=glints_enabled,
        seed=int(rng_seed),
    )
