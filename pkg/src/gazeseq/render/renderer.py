"""Analytic eye-image renderer.

Produces 100x160 8-bit grayscale frames from gaze angles and a
:class:`SubjectAppearance`.  The iris/pupil discs translate with gaze
(``gain_per_degree_px`` pixels per degree, pitch up moving the iris up
in the image); two parabolic eyelids clip the visible region, with the
palpebral aperture shrinking as pitch decreases so that downward gaze
occludes more of the iris.  Edges are antialiased by 2x2 supersampling.
Sensor noise is additive Gaussian, applied after geometry and before
quantization.

Right eyes are rendered as the exact horizontal mirror of the left-eye
geometry, so ``render_eye(g, ..., RIGHT)`` equals
``mirror_image(render_eye(mirror_angles(g), ..., LEFT))`` bit-exactly
at zero noise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..geometry import GazeAngles, mirror_angles
from ._select import rasterize
from .appearance import FRAME_HEIGHT, FRAME_WIDTH, SubjectAppearance

__all__ = ["Side", "EyeFrame", "render_eye", "mirror_image"]

PUPIL_INTENSITY = 12.0
GLINT_INTENSITY = 250.0
GLINT_RADIUS_PX = 1.6
GLINT_OFFSET_PX = (4.0, -3.0)  # glint pair sits +/-dx, dy from the iris center

# eyelid model: fissure half-width, vertical tracking of the iris, and
# aperture change per degree of pitch
LID_HALF_WIDTH_PX = 72.0
LID_TRACK = 0.7
APERTURE_GAIN_PX_PER_DEG = 0.8
UPPER_LID_SHARE = 0.62  # upper lid covers more of the aperture change

MAX_ABS_GAZE_DEG = 45.0


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    def flipped(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True)
class EyeFrame:
    """One 100x160 8-bit grayscale monocular eye image."""

    pixels: np.ndarray
    side: Side

    def __post_init__(self) -> None:
        if self.pixels.shape != (FRAME_HEIGHT, FRAME_WIDTH):
            raise ValueError(f"expected {FRAME_HEIGHT}x{FRAME_WIDTH} pixels, got {self.pixels.shape}")
        if self.pixels.dtype != np.uint8:
            raise ValueError(f"expected uint8 pixels, got {self.pixels.dtype}")


def _geometry_image(gaze: GazeAngles, app: SubjectAppearance) -> np.ndarray:
    """Noise-free left-eye-geometry image as float64 intensities."""
    gx, gy = app.gain_per_degree_px
    cx = FRAME_WIDTH / 2.0 + app.eye_center_offset_px[0] + gx * gaze.yaw_deg
    cy = FRAME_HEIGHT / 2.0 + app.eye_center_offset_px[1] - gy * gaze.pitch_deg

    r = app.iris_radius_px
    if cx + r < 0 or cx - r > FRAME_WIDTH - 1 or cy + r < 0 or cy - r > FRAME_HEIGHT - 1:
        raise ValueError(f"iris projects fully outside the frame at gaze {gaze}")

    # fissure center partially tracks the iris vertically; aperture
    # narrows with downward pitch
    lid_cx = FRAME_WIDTH / 2.0 + app.eye_center_offset_px[0]
    lid_cy = FRAME_HEIGHT / 2.0 + app.eye_center_offset_px[1] - LID_TRACK * gy * gaze.pitch_deg
    aperture = max(0.0, app.eyelid_aperture_px + APERTURE_GAIN_PX_PER_DEG * gaze.pitch_deg)
    ap_up = UPPER_LID_SHARE * aperture
    ap_lo = (1.0 - UPPER_LID_SHARE) * aperture

    pupil_r = app.pupil_to_iris_ratio * r
    return rasterize(
        FRAME_HEIGHT,
        FRAME_WIDTH,
        cx,
        cy,
        pupil_r * pupil_r,
        r * r,
        lid_cx,
        lid_cy,
        LID_HALF_WIDTH_PX,
        ap_up,
        ap_lo,
        app.sclera_intensity,
        app.iris_intensity,
        PUPIL_INTENSITY,
        app.skin_intensity,
        int(app.glints_enabled),
        GLINT_RADIUS_PX * GLINT_RADIUS_PX,
        cx - GLINT_OFFSET_PX[0],
        cy + GLINT_OFFSET_PX[1],
        cx + GLINT_OFFSET_PX[0],
        cy + GLINT_OFFSET_PX[1],
        GLINT_INTENSITY,
    )


def render_eye(
    gaze: GazeAngles,
    app: SubjectAppearance,
    noise_sigma: float = 0.0,
    frame_rng_seed: int | Sequence[int] | None = None,
    side: Side = Side.LEFT,
) -> EyeFrame:
    """Render one frame; pure function of its arguments.

    ``noise_sigma`` is the additive Gaussian sensor noise in intensity
    units (pre-quantization); ``frame_rng_seed`` seeds the noise draw
    and may be an int or a sequence of ints.
    """
    if abs(gaze.yaw_deg) > MAX_ABS_GAZE_DEG or abs(gaze.pitch_deg) > MAX_ABS_GAZE_DEG:
        raise ValueError(f"gaze {gaze} outside the +/-{MAX_ABS_GAZE_DEG} deg rendering envelope")
    if noise_sigma < 0:
        raise ValueError("noise_sigma must be non-negative")

    geom_gaze = mirror_angles(gaze) if side is Side.RIGHT else gaze
    img = _geometry_image(geom_gaze, app)
    if side is Side.RIGHT:
        img = img[:, ::-1]
    if noise_sigma > 0.0:
        rng = np.random.default_rng(frame_rng_seed)
        img = img + noise_sigma * rng.standard_normal(img.shape)
    pixels = np.clip(np.rint(img), 0.0, 255.0).astype(np.uint8)
    return EyeFrame(pixels=pixels, side=side)


def mirror_image(frame: EyeFrame) -> EyeFrame:
    """Horizontal flip; toggles the recorded side."""
    return EyeFrame(pixels=np.ascontiguousarray(frame.pixels[:, ::-1]), side=frame.side.flipped())
