"""Closed-loop headless simulation of a user following guidance.

A synthetic user holds a pose (horizontal offset, vertical center, face
width, head tilt). Each frame the pose is projected to face landmarks,
classified, and fed to the guidance engine; when an event names an axis,
the user applies a configurable fraction of the exact correction after a
reaction delay. Per-frame positional jitter models detector and body
noise; it perturbs what is observed, it does not accumulate into the
pose, so a compliant user provably settles.

Runs are fully deterministic for a fixed seed: randomness comes from an
in-repo splitmix64 generator with Box-Muller normals, not from any
platform default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, TextIO, Tuple

from .engine import (
    AXIS_BY_KEY,
    EngineConfig,
    EngineState,
    GuidanceEvent,
    MessageCatalog,
    Observation,
    default_catalog,
    state_digest,
    step,
)
from .geometry import AlignmentState, FaceLandmarks, Point2, analyze
from .snapshots import read_snapshot

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 PRNG (Steele, Lea, Flood 2014): 64-bit state, additive
    constant 0x9E3779B97F4A7C15, two xor-shift-multiply mixing rounds."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def gauss(self) -> float:
        """Standard normal via Box-Muller (cosine branch, no caching)."""
        u1 = self.uniform()
        while u1 == 0.0:
            u1 = self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)


@dataclass(frozen=True)
class UserModel:
    """Initial pose plus response behavior of the synthetic user."""

    x_offset: float = 0.0
    y_center: float = 0.42
    face_width: float = 0.30
    tilt_deg: float = 0.0
    compliance: float = 0.5
    reaction_frames: int = 3
    noise_sigma: float = 0.005
    seed: int = 0

    def __post_init__(self) -> None:
        if not (0.0 <= self.compliance <= 1.0):
            raise ValueError("compliance must be in [0, 1]")
        if self.reaction_frames < 0:
            raise ValueError("reaction_frames must be non-negative")
        if self.noise_sigma < 0:
            raise ValueError("noise_sigma must be non-negative")
        if self.face_width <= 0:
            raise ValueError("face_width must be positive")


@dataclass(frozen=True)
class SimConfig:
    frame_interval_ms: int = 33
    max_cycles: int = 40
    convergence_hold_frames: int = 30

    def __post_init__(self) -> None:
        if self.frame_interval_ms <= 0:
            raise ValueError("frame_interval_ms must be positive")
        if self.max_cycles < 1:
            raise ValueError("max_cycles must be at least 1")
        if self.convergence_hold_frames < 1:
            raise ValueError("convergence_hold_frames must be at least 1")


@dataclass(frozen=True)
class FrameRecord:
    timestamp_ms: int
    pose: Optional[Tuple[float, float, float, float]]  # x_offset, y_center, width, tilt
    observation: Optional[FaceLandmarks]
    alignment: AlignmentState
    selected: Optional[str]
    event: Optional[GuidanceEvent]
    suppressed: bool
    digest: str


@dataclass
class SessionTrace:
    frames: List[FrameRecord] = field(default_factory=list)
    converged: bool = False
    cycles_used: int = 0
    frames_used: int = 0
    seed: Optional[int] = None


def _clamp(v: float) -> float:
    return 0.0 if v < 0.0 else 1.0 if v > 1.0 else v


# Placeholder face proportions; only their round-trip consistency matters.
EYE_HALF_SEPARATION = 0.35
BBOX_HEIGHT_RATIO = 1.3


def project_pose(
    x_offset: float, y_center: float, face_width: float, tilt_deg: float
) -> FaceLandmarks:
    """Project a pose to landmarks: nose at (0.5 + x_offset, y_center), eye
    points symmetric about the nose rotated by the tilt, bounding box
    centered on the nose. Every coordinate clamps to [0, 1]."""
    nose_x = 0.5 + x_offset
    nose_y = y_center
    half = EYE_HALF_SEPARATION * face_width
    theta = math.radians(tilt_deg)
    dx = half * math.cos(theta)
    dy = half * math.sin(theta)
    left = (_clamp(nose_x - dx), _clamp(nose_y - dy))
    right = (_clamp(nose_x + dx), _clamp(nose_y + dy))
    if left == right:
        # clamping collapsed the eye points at a frame corner; keep them
        # distinct so the landmark contract holds
        left = (max(left[0] - 1e-6, 0.0), left[1])
    return FaceLandmarks(
        nose=Point2(_clamp(nose_x), _clamp(nose_y)),
        left_eye_outer=Point2(*left),
        right_eye_outer=Point2(*right),
        bbox_center=Point2(_clamp(nose_x), _clamp(nose_y)),
        bbox_width=min(face_width, 1.0),
        bbox_height=min(BBOX_HEIGHT_RATIO * face_width, 1.0),
    )


def project(user: UserModel) -> FaceLandmarks:
    """Landmarks for a user's current pose."""
    return project_pose(user.x_offset, user.y_center, user.face_width, user.tilt_deg)


def run(
    user: UserModel,
    engine_cfg: Optional[EngineConfig] = None,
    sim_cfg: Optional[SimConfig] = None,
    catalog: Optional[MessageCatalog] = None,
    record_frames: bool = True,
) -> SessionTrace:
    """Drive the closed loop until convergence or the event budget runs out.

    Convergence means the analyzed state stayed all-Ok for
    ``convergence_hold_frames`` consecutive frames. ``record_frames=False``
    skips per-frame records (sweeps only need the summary).
    """
    engine_cfg = engine_cfg or EngineConfig()
    sim_cfg = sim_cfg or SimConfig()
    catalog = catalog or default_catalog()
    spatial = engine_cfg.spatial
    rng = SplitMix64(user.seed)

    x, y, w, tilt = user.x_offset, user.y_center, user.face_width, user.tilt_deg
    distance_mid = (spatial.distance_far_width + spatial.distance_near_width) / 2.0

    state = EngineState()
    trace = SessionTrace(seed=user.seed)
    pending_moves: List[Tuple[int, str]] = []
    ok_streak = 0
    frame = 0
    # Hard termination bound: an unconverged loop keeps producing events at
    # least once per debounce window, so the budget is spent within this cap.
    frames_per_event = math.ceil(engine_cfg.speech_debounce_ms / sim_cfg.frame_interval_ms)
    frame_cap = (
        (sim_cfg.max_cycles + 1) * (frames_per_event + user.reaction_frames + 5)
        + sim_cfg.convergence_hold_frames
        + 200
    )

    while True:
        frame += 1
        ts = (frame - 1) * sim_cfg.frame_interval_ms

        if pending_moves:
            due = [m for m in pending_moves if m[0] <= frame]
            if due:
                pending_moves = [m for m in pending_moves if m[0] > frame]
                for _, axis in due:
                    if axis == "horizontal":
                        x += user.compliance * (0.0 - x)
                    elif axis == "vertical":
                        y += user.compliance * (spatial.vertical_ideal - y)
                    elif axis == "tilt":
                        tilt += user.compliance * (0.0 - tilt)
                    elif axis == "distance":
                        w += user.compliance * (distance_mid - w)

        if user.noise_sigma > 0.0:
            seen_x = x + rng.gauss() * user.noise_sigma
            seen_y = y + rng.gauss() * user.noise_sigma
        else:
            seen_x, seen_y = x, y
        landmarks = project_pose(seen_x, seen_y, w, tilt)
        observation = Observation(timestamp_ms=ts, landmarks=landmarks)
        state, events = step(state, observation, engine_cfg, catalog)
        alignment = analyze(landmarks, state.current_lighting, spatial)

        event = events[0] if events else None
        if event is not None:
            trace.cycles_used += 1
            axis = AXIS_BY_KEY.get(event.key)
            if axis is not None:
                pending_moves.append((frame + user.reaction_frames, axis))
        selected = event.key if event is not None else state.pending_message

        if record_frames:
            trace.frames.append(
                FrameRecord(
                    timestamp_ms=ts,
                    pose=(x, y, w, tilt),
                    observation=landmarks,
                    alignment=alignment,
                    selected=selected,
                    event=event,
                    suppressed=event is None and selected is not None,
                    digest=state_digest(state),
                )
            )

        ok_streak = ok_streak + 1 if alignment.all_ok() else 0
        if ok_streak >= sim_cfg.convergence_hold_frames:
            trace.converged = True
            break
        if trace.cycles_used >= sim_cfg.max_cycles:
            break
        if frame >= frame_cap:
            break

    trace.frames_used = frame
    return trace


def replay(
    snapshot_path,
    engine_cfg: Optional[EngineConfig] = None,
    catalog: Optional[MessageCatalog] = None,
    sim_cfg: Optional[SimConfig] = None,
) -> SessionTrace:
    """Feed a recorded landmark snapshot file through the engine.

    The resulting trace is deterministic for identical inputs. Alignment
    records show the raw per-frame classification, presence included,
    before the engine's debounces.
    """
    engine_cfg = engine_cfg or EngineConfig()
    sim_cfg = sim_cfg or SimConfig()
    catalog = catalog or default_catalog()
    observations = read_snapshot(snapshot_path)

    state = EngineState()
    trace = SessionTrace(seed=None)
    ok_streak = 0
    for observation in observations:
        state, events = step(state, observation, engine_cfg, catalog)
        alignment = analyze(observation.landmarks, state.current_lighting, engine_cfg.spatial)
        event = events[0] if events else None
        if event is not None:
            trace.cycles_used += 1
        selected = event.key if event is not None else state.pending_message
        trace.frames.append(
            FrameRecord(
                timestamp_ms=observation.timestamp_ms,
                pose=None,
                observation=observation.landmarks,
                alignment=alignment,
                selected=selected,
                event=event,
                suppressed=event is None and selected is not None,
                digest=state_digest(state),
            )
        )
        ok_streak = ok_streak + 1 if alignment.all_ok() else 0
        if ok_streak >= sim_cfg.convergence_hold_frames and not trace.converged:
            trace.converged = True
    trace.frames_used = len(trace.frames)
    return trace


# ---------------------------------------------------------------------------
# Trace files
# ---------------------------------------------------------------------------

def summary_line(trace: SessionTrace) -> str:
    seed = trace.seed if trace.seed is not None else "-"
    return (
        f"converged={'true' if trace.converged else 'false'}"
        f" cycles={trace.cycles_used} frames={trace.frames_used} seed={seed}"
    )


def _format_frame(record: FrameRecord) -> str:
    if record.pose is not None:
        pose = ",".join(f"{v:.6f}" for v in record.pose)
    else:
        pose = "-"
    if record.observation is None:
        obs = "NOFACE"
    else:
        lm = record.observation
        obs = f"{lm.nose.x:.6f},{lm.nose.y:.6f},{lm.bbox_width:.6f}"
    a = record.alignment
    align = ",".join(
        (
            a.horizontal.value,
            a.vertical.value,
            a.tilt.value,
            a.distance.value,
            a.presence.value,
            a.lighting.value,
        )
    )
    if record.event is not None:
        ev = record.event.key
    elif record.suppressed:
        ev = "suppressed"
    else:
        ev = "-"
    return (
        f"t={record.timestamp_ms} user={pose} obs={obs} align={align}"
        f" sel={record.selected or '-'} ev={ev} state={record.digest}"
    )


def write_trace(fh: TextIO, trace: SessionTrace) -> None:
    """Serialize a trace; output is bit-exact for identical traces."""
    fh.write("# camguide session trace v1\n")
    for record in trace.frames:
        fh.write(_format_frame(record) + "\n")
    fh.write(summary_line(trace) + "\n")


def trace_to_text(trace: SessionTrace) -> str:
    import io

    buf = io.StringIO()
    write_trace(buf, trace)
    return buf.getvalue()
