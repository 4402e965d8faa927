"""Angular error metrics for gaze regression.

All errors are per-axis mean absolute errors in degrees; the "mean" axis
is the per-sample average of the yaw and pitch absolute errors.  Spread
is reported as the population standard deviation (ddof=0) over the same
per-sample values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .geometry import GazeAngles, as_angle_array

__all__ = ["ErrorStats", "error_stats", "mae", "relative_improvement"]


@dataclass(frozen=True)
class ErrorStats:
    mae_yaw: float
    mae_pitch: float
    mae_mean: float
    std_yaw: float
    std_pitch: float
    std_mean: float
    n: int


def error_stats(abs_yaw: np.ndarray, abs_pitch: np.ndarray) -> ErrorStats:
    """Summarize per-sample absolute errors (degrees) into :class:`ErrorStats`."""
    abs_yaw = np.asarray(abs_yaw, dtype=np.float64)
    abs_pitch = np.asarray(abs_pitch, dtype=np.float64)
    if abs_yaw.shape != abs_pitch.shape or abs_yaw.ndim != 1 or abs_yaw.size == 0:
        raise ValueError("per-axis error arrays must be equal-length, nonempty 1D")
    per_sample_mean = 0.5 * (abs_yaw + abs_pitch)
    return ErrorStats(
        mae_yaw=float(abs_yaw.mean()),
        mae_pitch=float(abs_pitch.mean()),
        mae_mean=float(per_sample_mean.mean()),
        std_yaw=float(abs_yaw.std()),
        std_pitch=float(abs_pitch.std()),
        std_mean=float(per_sample_mean.std()),
        n=int(abs_yaw.size),
    )


def mae(
    preds: Iterable[GazeAngles] | np.ndarray,
    gts: Iterable[GazeAngles] | np.ndarray,
) -> ErrorStats:
    """Mean absolute error between index-aligned predictions and ground truth."""
    p = as_angle_array(preds)
    g = as_angle_array(gts)
    if p.shape != g.shape:
        raise ValueError(f"length mismatch: {p.shape[0]} predictions vs {g.shape[0]} ground truths")
    if p.shape[0] == 0:
        raise ValueError("cannot compute MAE of empty inputs")
    diff = np.abs(p - g)
    return error_stats(diff[:, 0], diff[:, 1])


def relative_improvement(base: float, other: float) -> float:
    """Error reduction of ``other`` relative to ``base``, in percent.

    Positive when ``other`` is lower (better) than ``base``.
    """
    if not base > 0:
        raise ValueError(f"baseline error must be positive, got {base}")
    return 100.0 * (base - other) / base
