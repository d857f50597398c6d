"""Debounced, prioritized guidance decisions over per-frame observations.

The engine is a pure transition function: ``step`` takes an immutable
state plus one observation and returns the successor state and at most
one guidance event. It never reads the wall clock; callers supply
monotonic logical timestamps, which makes every timing rule unit
testable.

Three rules shape the output stream:

* one global speech debounce window across all utterances (default
  4000 ms), with the latest suppressed correction kept as a pending
  message and re-evaluated on the next step instead of being queued;
* presence loss is declared only after a run of consecutive
  landmark-absent frames (default 10), and a single present frame resets
  the run;
* exactly one correction key per step, picked in the fixed priority
  order presence > distance > horizontal > vertical > tilt > lighting >
  aligned confirmation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Dict, List, Mapping, Optional, Tuple

from .geometry import (
    AlignmentState,
    Distance,
    FaceLandmarks,
    Horizontal,
    Lighting,
    Presence,
    SpatialThresholds,
    Tilt,
    Vertical,
    analyze,
)
from .luminance import LightingThresholds, LumaFrame, lighting_status, mean_luma, should_sample


class TimestampRegressionError(ValueError):
    """An observation arrived with a timestamp older than one already seen."""


class CatalogError(KeyError):
    """A message key cannot be resolved in the default locale."""


class Severity(Enum):
    ASSERTIVE = "Assertive"
    POLITE = "Polite"


KEY_NO_FACE = "no_face"
KEY_TOO_FAR = "too_far"
KEY_TOO_CLOSE = "too_close"
KEY_TOO_FAR_LEFT = "too_far_left"
KEY_TOO_FAR_RIGHT = "too_far_right"
KEY_TOO_HIGH = "too_high"
KEY_TOO_LOW = "too_low"
KEY_TILT_CW = "tilt_clockwise"
KEY_TILT_CCW = "tilt_counter_clockwise"
KEY_TOO_DARK = "too_dark"
KEY_TOO_BRIGHT = "too_bright"
KEY_ALIGNED = "aligned"

# Spatial corrections and presence loss interrupt; status messages queue.
SEVERITY_BY_KEY: Mapping[str, Severity] = {
    KEY_NO_FACE: Severity.ASSERTIVE,
    KEY_TOO_FAR: Severity.ASSERTIVE,
    KEY_TOO_CLOSE: Severity.ASSERTIVE,
    KEY_TOO_FAR_LEFT: Severity.ASSERTIVE,
    KEY_TOO_FAR_RIGHT: Severity.ASSERTIVE,
    KEY_TOO_HIGH: Severity.ASSERTIVE,
    KEY_TOO_LOW: Severity.ASSERTIVE,
    KEY_TILT_CW: Severity.ASSERTIVE,
    KEY_TILT_CCW: Severity.ASSERTIVE,
    KEY_TOO_DARK: Severity.POLITE,
    KEY_TOO_BRIGHT: Severity.POLITE,
    KEY_ALIGNED: Severity.POLITE,
}

# Axis the user is asked to adjust, for consumers that act on events.
AXIS_BY_KEY: Mapping[str, str] = {
    KEY_TOO_FAR: "distance",
    KEY_TOO_CLOSE: "distance",
    KEY_TOO_FAR_LEFT: "horizontal",
    KEY_TOO_FAR_RIGHT: "horizontal",
    KEY_TOO_HIGH: "vertical",
    KEY_TOO_LOW: "vertical",
    KEY_TILT_CW: "tilt",
    KEY_TILT_CCW: "tilt",
}


class MessageCatalog:
    """Message templates keyed by (message key, locale).

    Every key must resolve in the default locale; other locales may be
    partial and fall back to it. Templates may contain ``str.format``
    placeholders.
    """

    def __init__(self, entries: Mapping[str, Mapping[str, str]], default_locale: str = "en"):
        self.default_locale = default_locale
        self.entries: Dict[str, Dict[str, str]] = {
            key: dict(locales) for key, locales in entries.items()
        }
        for key, locales in self.entries.items():
            if default_locale not in locales:
                raise CatalogError(f"key {key!r} missing default locale {default_locale!r}")

    def resolve(self, key: str, locale: Optional[str] = None, **params: object) -> str:
        locales = self.entries.get(key)
        if locales is None:
            raise CatalogError(f"unknown message key {key!r}")
        template = locales.get(locale or self.default_locale, locales[self.default_locale])
        return template.format(**params) if params else template

    def keys(self):
        return self.entries.keys()

    @classmethod
    def from_json(cls, path, default_locale: str = "en") -> "MessageCatalog":
        with open(path, "r", encoding="utf-8") as fh:
            return cls(json.load(fh), default_locale)


def default_catalog() -> MessageCatalog:
    """The catalog shipped with the package (complete "en", partial "ne")."""
    payload = resources.files("camguide").joinpath("data/messages.json").read_text("utf-8")
    return MessageCatalog(json.loads(payload))


def resolve_message(
    key: str, locale: str, catalog: MessageCatalog, **params: object
) -> str:
    """Resolve ``key`` in ``locale`` with default-locale fallback."""
    return catalog.resolve(key, locale, **params)


@dataclass(frozen=True)
class EngineConfig:
    spatial: SpatialThresholds = field(default_factory=SpatialThresholds)
    lighting: LightingThresholds = field(default_factory=LightingThresholds)
    speech_debounce_ms: int = 4000
    noface_frame_debounce: int = 10
    locale: str = "en"

    def __post_init__(self) -> None:
        if self.speech_debounce_ms <= 0:
            raise ValueError("speech_debounce_ms must be positive")
        if self.noface_frame_debounce < 1:
            raise ValueError("noface_frame_debounce must be at least 1")


@dataclass(frozen=True)
class GuidanceEvent:
    key: str
    text: str
    severity: Severity
    timestamp_ms: int

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("event text must be non-empty")


@dataclass(frozen=True)
class Observation:
    """One frame of input: a logical timestamp plus optional payloads."""

    timestamp_ms: int
    landmarks: Optional[FaceLandmarks] = None
    luma: Optional[LumaFrame] = None


@dataclass(frozen=True)
class EngineState:
    """Value-typed engine state; ``step`` never mutates, it returns a successor.

    ``aligned_spoken`` marks whether the current contiguous all-Ok stretch
    has had its confirmation spoken, so the confirmation fires at most once
    per transition into the aligned state. ``last_timestamp_ms`` backs the
    monotonic-timestamp contract check.
    """

    last_timestamp_ms: Optional[int] = None
    last_utterance_ms: Optional[int] = None
    consecutive_noface_frames: int = 0
    last_lighting_sample_ms: Optional[int] = None
    current_lighting: Lighting = Lighting.UNKNOWN
    presence_confirmed: bool = True
    last_announced_state: Optional[AlignmentState] = None
    pending_message: Optional[str] = None
    aligned_spoken: bool = False


def select_correction(
    a: AlignmentState, already_aligned: bool = False
) -> Optional[str]:
    """Pick the single highest-priority message key for a frame state.

    Returns None when there is nothing to say: either the state is
    aligned and ``already_aligned`` says the confirmation was spoken for
    this stretch, or the only deviation is lighting Unknown (no sample yet).
    """
    if a.presence is Presence.LOST:
        return KEY_NO_FACE
    if a.distance is Distance.TOO_FAR:
        return KEY_TOO_FAR
    if a.distance is Distance.TOO_CLOSE:
        return KEY_TOO_CLOSE
    if a.horizontal is Horizontal.TOO_LEFT:
        return KEY_TOO_FAR_LEFT
    if a.horizontal is Horizontal.TOO_RIGHT:
        return KEY_TOO_FAR_RIGHT
    if a.vertical is Vertical.TOO_HIGH:
        return KEY_TOO_HIGH
    if a.vertical is Vertical.TOO_LOW:
        return KEY_TOO_LOW
    if a.tilt is Tilt.CLOCKWISE:
        return KEY_TILT_CW
    if a.tilt is Tilt.COUNTER_CLOCKWISE:
        return KEY_TILT_CCW
    if a.lighting is Lighting.TOO_DARK:
        return KEY_TOO_DARK
    if a.lighting is Lighting.TOO_BRIGHT:
        return KEY_TOO_BRIGHT
    if a.all_ok() and not already_aligned:
        return KEY_ALIGNED
    return None


def step(
    state: EngineState,
    observation: Observation,
    cfg: EngineConfig,
    catalog: MessageCatalog,
) -> Tuple[EngineState, List[GuidanceEvent]]:
    """Advance the engine by one frame.

    Returns the successor state and a list holding at most one event.
    Raises TimestampRegressionError if the observation's timestamp is
    older than any previously fed timestamp, and CatalogError if a
    selected key cannot be resolved.
    """
    ts = observation.timestamp_ms
    if state.last_timestamp_ms is not None and ts < state.last_timestamp_ms:
        raise TimestampRegressionError(
            f"timestamp {ts} precedes {state.last_timestamp_ms}"
        )

    lighting = state.current_lighting
    last_sample_ms = state.last_lighting_sample_ms
    if observation.luma is not None and should_sample(ts, last_sample_ms, cfg.lighting):
        lighting = lighting_status(mean_luma(observation.luma), cfg.lighting)
        last_sample_ms = ts

    if observation.landmarks is None:
        noface_frames = state.consecutive_noface_frames + 1
        presence_confirmed = noface_frames < cfg.noface_frame_debounce
    else:
        noface_frames = 0
        presence_confirmed = True

    # A landmark-absent frame below the debounce threshold is indeterminate:
    # no geometric advice, no premature presence loss.
    alignment: Optional[AlignmentState]
    if observation.landmarks is not None:
        alignment = analyze(observation.landmarks, lighting, cfg.spatial)
    elif not presence_confirmed:
        alignment = analyze(None, lighting, cfg.spatial)
    else:
        alignment = None

    if alignment is None:
        aligned_spoken = state.aligned_spoken
        selected = None
    else:
        if alignment.all_ok():
            aligned_spoken = state.aligned_spoken
        else:
            aligned_spoken = False
        selected = select_correction(alignment, already_aligned=aligned_spoken)

    events: List[GuidanceEvent] = []
    pending: Optional[str] = None
    last_utterance_ms = state.last_utterance_ms
    last_announced = state.last_announced_state
    if selected is not None:
        debounce_open = (
            last_utterance_ms is None
            or ts - last_utterance_ms >= cfg.speech_debounce_ms
        )
        if debounce_open:
            text = resolve_message(selected, cfg.locale, catalog)
            events.append(
                GuidanceEvent(selected, text, SEVERITY_BY_KEY[selected], ts)
            )
            last_utterance_ms = ts
            last_announced = alignment
            if selected == KEY_ALIGNED:
                aligned_spoken = True
        else:
            pending = selected

    new_state = EngineState(
        last_timestamp_ms=ts,
        last_utterance_ms=last_utterance_ms,
        consecutive_noface_frames=noface_frames,
        last_lighting_sample_ms=last_sample_ms,
        current_lighting=lighting,
        presence_confirmed=presence_confirmed,
        last_announced_state=last_announced,
        pending_message=pending,
        aligned_spoken=aligned_spoken,
    )
    return new_state, events


def state_digest(state: EngineState) -> str:
    """Compact, stable single-token rendering of an EngineState for traces."""
    return (
        f"noface:{state.consecutive_noface_frames}"
        f",presence:{int(state.presence_confirmed)}"
        f",lighting:{state.current_lighting.value}"
        f",last_utt:{state.last_utterance_ms if state.last_utterance_ms is not None else '-'}"
        f",pending:{state.pending_message or '-'}"
        f",aligned:{int(state.aligned_spoken)}"
    )
