"""NumPy fallback rasterizer.

Evaluates exactly the same per-sample expressions as the compiled
kernel in ``_raster.pyx`` (same operations, same order, float64
throughout, no transcendentals), so both backends produce bit-identical
images.  Keep the two files in sync.
"""

from __future__ import annotations

import numpy as np

# 2x2 supersampling offsets around the pixel center, fixed order
_OFFSETS = ((-0.25, -0.25), (-0.25, 0.25), (0.25, -0.25), (0.25, 0.25))


def _sample(
    y,
    x,
    cx,
    cy,
    pupil_r2,
    iris_r2,
    lid_cx,
    lid_cy,
    lid_halfw,
    ap_up,
    ap_lo,
    sclera,
    iris_i,
    pupil_i,
    skin,
    glints_on,
    glint_r2,
    gx1,
    gy1,
    gx2,
    gy2,
    glint_i,
):
    u = (x - lid_cx) / lid_halfw
    omu = 1.0 - u * u
    top = lid_cy - ap_up * omu
    bot = lid_cy + ap_lo * omu
    inside = (omu > 0.0) & (y >= top) & (y <= bot)

    dx = x - cx
    dy = y - cy
    d2 = dx * dx + dy * dy
    val = np.where(d2 <= pupil_r2, pupil_i, np.where(d2 <= iris_r2, iris_i, sclera))
    if glints_on:
        dgx1 = x - gx1
        dgy1 = y - gy1
        dgx2 = x - gx2
        dgy2 = y - gy2
        hit = (dgx1 * dgx1 + dgy1 * dgy1 <= glint_r2) | (dgx2 * dgx2 + dgy2 * dgy2 <= glint_r2)
        val = np.where(hit, glint_i, val)
    return np.where(inside, val, skin)


def rasterize(
    h: int,
    w: int,
    cx: float,
    cy: float,
    pupil_r2: float,
    iris_r2: float,
    lid_cx: float,
    lid_cy: float,
    lid_halfw: float,
    ap_up: float,
    ap_lo: float,
    sclera: float,
    iris_i: float,
    pupil_i: float,
    skin: float,
    glints_on: int,
    glint_r2: float,
    gx1: float,
    gy1: float,
    gx2: float,
    gy2: float,
    glint_i: float,
) -> np.ndarray:
    """Noise-free eye image as float64 intensities, shape (h, w)."""
    rows = np.arange(h, dtype=np.float64)[:, None]
    cols = np.arange(w, dtype=np.float64)[None, :]
    samples = []
    for dr, dc in _OFFSETS:
        samples.append(
            _sample(
                rows + dr,
                cols + dc,
                cx,
                cy,
                pupil_r2,
                iris_r2,
                lid_cx,
                lid_cy,
                lid_halfw,
                ap_up,
                ap_lo,
                sclera,
                iris_i,
                pupil_i,
                skin,
                glints_on,
                glint_r2,
                gx1,
                gy1,
                gx2,
                gy2,
                glint_i,
            )
        )
    s0, s1, s2, s3 = samples
    return (s0 + s1 + s2 + s3) * 0.25
