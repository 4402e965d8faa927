# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled rasterizer kernel.

Must stay expression-for-expression identical to ``_raster_py.py`` so
that the two backends produce bit-identical float64 images.
"""

import numpy as np


cdef inline double _sample(
    double y, double x,
    double cx, double cy, double pupil_r2, double iris_r2,
    double lid_cx, double lid_cy, double lid_halfw, double ap_up, double ap_lo,
    double sclera, double iris_i, double pupil_i, double skin,
    int glints_on, double glint_r2,
    double gx1, double gy1, double gx2, double gy2, double glint_i,
) noexcept nogil:
    cdef double u, omu, top, bot, dx, dy, d2, dgx1, dgy1, dgx2, dgy2
    u = (x - lid_cx) / lid_halfw
    omu = 1.0 - u * u
    if not (omu > 0.0):
        return skin
    top = lid_cy - ap_up * omu
    bot = lid_cy + ap_lo * omu
    if y < top or y > bot:
        return skin
    if glints_on:
        dgx1 = x - gx1
        dgy1 = y - gy1
        if dgx1 * dgx1 + dgy1 * dgy1 <= glint_r2:
            return glint_i
        dgx2 = x - gx2
        dgy2 = y - gy2
        if dgx2 * dgx2 + dgy2 * dgy2 <= glint_r2:
            return glint_i
    dx = x - cx
    dy = y - cy
    d2 = dx * dx + dy * dy
    if d2 <= pupil_r2:
        return pupil_i
    if d2 <= iris_r2:
        return iris_i
    return sclera


def rasterize(
    int h,
    int w,
    double cx,
    double cy,
    double pupil_r2,
    double iris_r2,
    double lid_cx,
    double lid_cy,
    double lid_halfw,
    double ap_up,
    double ap_lo,
    double sclera,
    double iris_i,
    double pupil_i,
    double skin,
    int glints_on,
    double glint_r2,
    double gx1,
    double gy1,
    double gx2,
    double gy2,
    double glint_i,
):
    """Noise-free eye image as float64 intensities, shape (h, w)."""
    out = np.empty((h, w), dtype=np.float64)
    cdef double[:, ::1] view = out
    cdef int r, c
    cdef double y, x, s0, s1, s2, s3
    with nogil:
        for r in range(h):
            for c in range(w):
                y = r - 0.25
                x = c - 0.25
                s0 = _sample(y, x, cx, cy, pupil_r2, iris_r2, lid_cx, lid_cy,
                             lid_halfw, ap_up, ap_lo, sclera, iris_i, pupil_i,
                             skin, glints_on, glint_r2, gx1, gy1, gx2, gy2, glint_i)
                y = r - 0.25
                x = c + 0.25
                s1 = _sample(y, x, cx, cy, pupil_r2, iris_r2, lid_cx, lid_cy,
                             lid_halfw, ap_up, ap_lo, sclera, iris_i, pupil_i,
                             skin, glints_on, glint_r2, gx1, gy1, gx2, gy2, glint_i)
                y = r + 0.25
                x = c - 0.25
                s2 = _sample(y, x, cx, cy, pupil_r2, iris_r2, lid_cx, lid_cy,
                             lid_halfw, ap_up, ap_lo, sclera, iris_i, pupil_i,
                             skin, glints_on, glint_r2, gx1, gy1, gx2, gy2, glint_i)
                y = r + 0.25
                x = c + 0.25
                s3 = _sample(y, x, cx, cy, pupil_r2, iris_r2, lid_cx, lid_cy,
                             lid_halfw, ap_up, ap_lo, sclera, iris_i, pupil_i,
                             skin, glints_on, glint_r2, gx1, gy1, gx2, gy2, glint_i)
                view[r, c] = (s0 + s1 + s2 + s3) * 0.25
    return out
