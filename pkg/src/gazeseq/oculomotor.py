"""Stimulus scripts and 100 Hz oculomotor simulation.

A stimulus script is a series of 1000 ms randomly-located target
fixations separated by 100 ms transition gaps.  The simulated eye
follows the targets with a sampled reaction latency per jump; each
saccade is a minimum-jerk position profile whose duration follows a
linear main sequence (duration = c0 + c1 * amplitude), landing at the
target plus Gaussian landing noise.  Fixation frames add Gaussian
jitter around the current fixation center.  Every frame is labeled FIX
or SAC; SAC means the frame time lies inside a saccade interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import GazeAngles

__all__ = [
    "FIX",
    "SAC",
    "FRAME_DT_MS",
    "StimulusEvent",
    "StimulusScript",
    "OculomotorParams",
    "ScanpathFrame",
    "minimum_jerk",
    "generate_stimulus",
    "simulate_scanpath",
]

FIX = "FIX"
SAC = "SAC"

FRAME_DT_MS = 10.0  # 100 Hz
FIXATION_MS = 1000.0
TRANSITION_MS = 100.0


@dataclass(frozen=True)
class StimulusEvent:
    target: GazeAngles
    onset_ms: float
    duration_ms: float


@dataclass(frozen=True)
class StimulusScript:
    events: tuple[StimulusEvent, ...]
    total_duration_ms: float

    def __post_init__(self) -> None:
        if not self.events:
            raise ValueError("stimulus script needs at least one fixation event")
        expect_onset = 0.0
        for ev in self.events:
            if ev.duration_ms != FIXATION_MS:
                raise ValueError(f"fixation events must last {FIXATION_MS} ms, got {ev.duration_ms}")
            if ev.onset_ms != expect_onset:
                raise ValueError(f"events must be contiguous with {TRANSITION_MS} ms gaps")
            expect_onset = ev.onset_ms + ev.duration_ms + TRANSITION_MS
        if self.total_duration_ms != self.events[-1].onset_ms + self.events[-1].duration_ms:
            raise ValueError("total_duration_ms must equal the last event's end time")


@dataclass(frozen=True)
class OculomotorParams:
    """Kinematic parameters of the simulated eye.

    Defaults are typical human values: ~200 ms saccade latency, main
    sequence 20 ms + 2.2 ms/deg, 0.1 deg fixation jitter and 0.3 deg
    saccade landing noise.
    """

    latency_ms_range: tuple[float, float] = (150.0, 250.0)
    duration_intercept_ms: float = 20.0  # c0 of the main sequence
    duration_slope_ms_per_deg: float = 2.2  # c1 of the main sequence
    fixation_jitter_sigma_deg: float = 0.1
    landing_noise_sigma_deg: float = 0.3

    def __post_init__(self) -> None:
        lo, hi = self.latency_ms_range
        if not (0 <= lo <= hi):
            raise ValueError(f"bad latency range {self.latency_ms_range}")
        if self.duration_intercept_ms <= 0 or self.duration_slope_ms_per_deg <= 0:
            raise ValueError("main-sequence coefficients must be positive")
        if self.fixation_jitter_sigma_deg < 0 or self.landing_noise_sigma_deg < 0:
            raise ValueError("noise sigmas must be non-negative")


@dataclass(frozen=True)
class ScanpathFrame:
    index: int
    t_ms: float
    gaze: GazeAngles
    label: str = field(default=FIX)


def minimum_jerk(t_norm):
    """Minimum-jerk position profile 10 t^3 - 15 t^4 + 6 t^5 on [0, 1].

    Accepts a scalar or array; monotone nondecreasing with zero velocity
    at both endpoints.
    """
    t = np.asarray(t_norm, dtype=np.float64)
    if np.any(t < 0.0) or np.any(t > 1.0):
        raise ValueError("normalized time must lie in [0, 1]")
    out = t**3 * (10.0 - 15.0 * t + 6.0 * t * t)
    if np.isscalar(t_norm):
        return float(out)
    return out


def generate_stimulus(
    rng_seed: int,
    n_fixations: int,
    yaw_range_deg: tuple[float, float] = (-20.0, 20.0),
    pitch_range_deg: tuple[float, float] = (-20.0, 20.0),
) -> StimulusScript:
    """Random fixation targets, uniform over the given angular ranges."""
    if n_fixations < 1:
        raise ValueError("need at least one fixation")
    for lo, hi in (yaw_range_deg, pitch_range_deg):
        if not (-45.0 <= lo < hi <= 45.0):
            raise ValueError(f"target range ({lo}, {hi}) must be non-empty and within +/-45 deg")
    rng = np.random.default_rng(rng_seed)
    yaws = rng.uniform(yaw_range_deg[0], yaw_range_deg[1], size=n_fixations)
    pitches = rng.uniform(pitch_range_deg[0], pitch_range_deg[1], size=n_fixations)
    events = tuple(
        StimulusEvent(
            target=GazeAngles(float(yaws[k]), float(pitches[k])),
            onset_ms=k * (FIXATION_MS + TRANSITION_MS),
            duration_ms=FIXATION_MS,
        )
        for k in range(n_fixations)
    )
    total = events[-1].onset_ms + FIXATION_MS
    return StimulusScript(events=events, total_duration_ms=total)


@dataclass(frozen=True)
class _Saccade:
    start_ms: float
    duration_ms: float
    origin: np.ndarray  # (yaw, pitch) at onset
    landing: np.ndarray  # target + landing noise

    @property
    def end_ms(self) -> float:
        return self.start_ms + self.duration_ms

    def position(self, t_ms: float) -> np.ndarray:
        frac = minimum_jerk((t_ms - self.start_ms) / self.duration_ms)
        return self.origin + (self.landing - self.origin) * frac


def simulate_scanpath(
    script: StimulusScript,
    params: OculomotorParams,
    rng_seed: int,
) -> list[ScanpathFrame]:
    """Simulate a 100 Hz gaze trace following ``script``.

    The eye starts already fixating the first target.  Each subsequent
    target change triggers a saccade after a latency sampled uniformly
    from ``params.latency_ms_range``, measured from the end of the
    previous fixation event (the moment the target starts moving).  A
    trigger that fires while a saccade is still in flight retargets
    from the current in-flight position.
    """
    rng = np.random.default_rng(rng_seed)
    n_events = len(script.events)
    latencies = rng.uniform(*params.latency_ms_range, size=n_events - 1)
    landing_noise = rng.normal(0.0, params.landing_noise_sigma_deg, size=(n_events - 1, 2))

    n_frames = int(np.floor(script.total_duration_ms / FRAME_DT_MS))
    jitter = rng.normal(0.0, params.fixation_jitter_sigma_deg, size=(n_frames, 2))

    # (trigger time, landing point) per target change
    triggers: list[tuple[float, np.ndarray]] = []
    for k in range(1, n_events):
        change_ms = script.events[k].onset_ms - TRANSITION_MS
        target = np.array(script.events[k].target.as_tuple())
        triggers.append((change_ms + float(latencies[k - 1]), target + landing_noise[k - 1]))
    triggers.sort(key=lambda tl: tl[0])  # extreme latencies may reorder reactions

    saccades: list[_Saccade] = []
    fix_center = np.array(script.events[0].target.as_tuple())
    for trigger_ms, landing in triggers:
        origin = fix_center
        if saccades and saccades[-1].start_ms <= trigger_ms < saccades[-1].end_ms:
            origin = saccades[-1].position(trigger_ms)  # retarget mid-flight
        amplitude = float(np.hypot(*(landing - origin)))
        duration = params.duration_intercept_ms + params.duration_slope_ms_per_deg * amplitude
        saccades.append(_Saccade(trigger_ms, duration, origin, landing))
        fix_center = landing

    # a trigger during flight truncates the saccade it interrupts
    cut_ends = [
        min(sac.end_ms, saccades[k + 1].start_ms) if k + 1 < len(saccades) else sac.end_ms
        for k, sac in enumerate(saccades)
    ]

    frames: list[ScanpathFrame] = []
    k = 0  # saccades are time-ordered; scan pointer avoids rescans
    center = np.array(script.events[0].target.as_tuple())
    for i in range(n_frames):
        t = i * FRAME_DT_MS
        while k < len(saccades) and t >= cut_ends[k]:
            center = saccades[k].landing
            k += 1
        if k < len(saccades) and saccades[k].start_ms <= t:
            pos = saccades[k].position(t)
            frames.append(ScanpathFrame(i, t, GazeAngles(float(pos[0]), float(pos[1])), SAC))
        else:
            pos = center + jitter[i]
            frames.append(ScanpathFrame(i, t, GazeAngles(float(pos[0]), float(pos[1])), FIX))
    return frames
