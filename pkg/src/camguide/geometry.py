"""Per-frame spatial classification of face landmarks.

Turns a normalized landmark snapshot into one classification per axis
(horizontal, vertical, tilt, distance) plus presence and lighting
passthrough. All functions are pure and reentrant.

Coordinate convention: normalized image coordinates with (0, 0) at the
top-left corner, x growing rightward, y growing downward. The frame is
assumed to be a mirrored self-view, so image-left corresponds to the
user's left.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

# Decimal thresholds such as 0.12 are not exactly representable in binary
# floating point (0.62 - 0.5 > 0.12 in IEEE 754); comparisons use this guard
# so boundary values classify per their decimal intent.
_EPS = 1e-9


class InvalidLandmarksError(ValueError):
    """Landmark geometry violates the input contract."""


class Horizontal(Enum):
    TOO_LEFT = "TooLeft"
    CENTERED = "Centered"
    TOO_RIGHT = "TooRight"


class Vertical(Enum):
    TOO_HIGH = "TooHigh"
    OK = "Ok"
    TOO_LOW = "TooLow"


class Tilt(Enum):
    LEVEL = "Level"
    CLOCKWISE = "TiltedClockwise"
    COUNTER_CLOCKWISE = "TiltedCounterClockwise"


class Distance(Enum):
    TOO_FAR = "TooFar"
    OK = "Ok"
    TOO_CLOSE = "TooClose"


class Presence(Enum):
    DETECTED = "Detected"
    LOST = "Lost"


class Lighting(Enum):
    TOO_DARK = "TooDark"
    OK = "Ok"
    TOO_BRIGHT = "TooBright"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Point2:
    """Normalized image point; both coordinates in [0, 1]."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.x <= 1.0 and 0.0 <= self.y <= 1.0):
            raise InvalidLandmarksError(
                f"point ({self.x}, {self.y}) outside the unit square"
            )


@dataclass(frozen=True)
class FaceLandmarks:
    """Key facial points for one frame.

    The detector supplies the nose tip, the two outer eye corners and a
    face bounding box, all in normalized coordinates. Eye points must be
    distinct; the bounding box must have positive extent.
    """

    nose: Point2
    left_eye_outer: Point2
    right_eye_outer: Point2
    bbox_center: Point2
    bbox_width: float
    bbox_height: float

    def __post_init__(self) -> None:
        if (
            self.left_eye_outer.x == self.right_eye_outer.x
            and self.left_eye_outer.y == self.right_eye_outer.y
        ):
            raise InvalidLandmarksError("eye points coincide")
        if not (0.0 < self.bbox_width <= 1.0):
            raise InvalidLandmarksError(f"bbox_width {self.bbox_width} out of (0, 1]")
        if not (0.0 < self.bbox_height <= 1.0):
            raise InvalidLandmarksError(f"bbox_height {self.bbox_height} out of (0, 1]")


@dataclass(frozen=True)
class SpatialThresholds:
    """Tolerances for the four geometric axes.

    Horizontal and vertical bands are symmetric around the ideal point
    (frame center, and ``vertical_ideal`` from the top). Distance uses the
    face bounding box width as a proxy; widths inside
    [distance_far_width, distance_near_width] count as in range.
    """

    horizontal_tolerance: float = 0.12
    vertical_ideal: float = 0.42
    vertical_tolerance: float = 0.12
    tilt_tolerance_deg: float = 8.0
    distance_far_width: float = 0.18
    distance_near_width: float = 0.45

    def __post_init__(self) -> None:
        if self.horizontal_tolerance <= 0 or self.vertical_tolerance <= 0:
            raise ValueError("tolerances must be positive")
        if self.tilt_tolerance_deg <= 0:
            raise ValueError("tilt tolerance must be positive")
        if not (0.0 < self.vertical_ideal < 1.0):
            raise ValueError("vertical_ideal must be inside (0, 1)")
        if not (0.0 < self.distance_far_width < self.distance_near_width):
            raise ValueError("distance band must satisfy 0 < far < near")


@dataclass(frozen=True)
class AlignmentState:
    """One classification per axis for a single frame.

    When ``presence`` is Lost the geometric axes hold their aligned values
    as an indeterminate-as-Ok convention; they carry no information and
    must not drive guidance.
    """

    horizontal: Horizontal
    vertical: Vertical
    tilt: Tilt
    distance: Distance
    presence: Presence
    lighting: Lighting

    def geometry_ok(self) -> bool:
        """True when all four geometric axes are in their aligned state."""
        return (
            self.horizontal is Horizontal.CENTERED
            and self.vertical is Vertical.OK
            and self.tilt is Tilt.LEVEL
            and self.distance is Distance.OK
        )

    def all_ok(self) -> bool:
        """True when the frame needs no correction at all.

        Lighting Unknown does not block: it means no luminance sample has
        been taken yet, not that lighting is bad.
        """
        return (
            self.presence is Presence.DETECTED
            and self.geometry_ok()
            and self.lighting in (Lighting.OK, Lighting.UNKNOWN)
        )


def horizontal_status(landmarks: FaceLandmarks, t: SpatialThresholds) -> Horizontal:
    """Classify left/right centering from the nose x offset to frame center."""
    offset = landmarks.nose.x - 0.5
    if abs(offset) <= t.horizontal_tolerance + _EPS:
        return Horizontal.CENTERED
    return Horizontal.TOO_LEFT if offset < 0 else Horizontal.TOO_RIGHT


def vertical_status(landmarks: FaceLandmarks, t: SpatialThresholds) -> Vertical:
    """Classify vertical framing from the face box center against the ideal."""
    offset = landmarks.bbox_center.y - t.vertical_ideal
    if abs(offset) <= t.vertical_tolerance + _EPS:
        return Vertical.OK
    return Vertical.TOO_HIGH if offset < 0 else Vertical.TOO_LOW


def tilt_status(
    landmarks: FaceLandmarks, t: SpatialThresholds
) -> Tuple[Tilt, float]:
    """Classify head tilt from the eye-line angle.

    Returns the classification and the angle in degrees, normalized to
    (-90, 90]. Positive angle means the right eye sits lower in the image
    (head tilted toward the user's right shoulder under the mirrored
    convention), reported as TiltedClockwise. The level band is strict:
    an angle exactly at the tolerance counts as tilted.
    """
    dx = landmarks.right_eye_outer.x - landmarks.left_eye_outer.x
    dy = landmarks.right_eye_outer.y - landmarks.left_eye_outer.y
    if dx == 0.0 and dy == 0.0:
        raise InvalidLandmarksError("eye points coincide")
    angle = math.degrees(math.atan2(dy, dx))
    if angle <= -90.0:
        angle += 180.0
    elif angle > 90.0:
        angle -= 180.0
    if abs(angle) < t.tilt_tolerance_deg - _EPS:
        return Tilt.LEVEL, angle
    return (Tilt.CLOCKWISE if angle > 0 else Tilt.COUNTER_CLOCKWISE), angle


def distance_status(landmarks: FaceLandmarks, t: SpatialThresholds) -> Distance:
    """Classify distance using bounding box width as a proxy; band-inclusive."""
    width = landmarks.bbox_width
    if width < t.distance_far_width - _EPS:
        return Distance.TOO_FAR
    if width > t.distance_near_width + _EPS:
        return Distance.TOO_CLOSE
    return Distance.OK


_INDETERMINATE = dict(
    horizontal=Horizontal.CENTERED,
    vertical=Vertical.OK,
    tilt=Tilt.LEVEL,
    distance=Distance.OK,
)


def analyze(
    landmarks: Optional[FaceLandmarks],
    lighting: Lighting,
    t: SpatialThresholds,
) -> AlignmentState:
    """Classify one frame on every axis.

    Absent landmarks yield raw (pre-debounce) presence Lost with the
    geometric axes at their indeterminate-as-Ok convention. Lighting is
    passed through unchanged; sampling it is the caller's concern.
    """
    if landmarks is None:
        return AlignmentState(
            presence=Presence.LOST, lighting=lighting, **_INDETERMINATE
        )
    tilt, _ = tilt_status(landmarks, t)
    return AlignmentState(
        horizontal=horizontal_status(landmarks, t),
        vertical=vertical_status(landmarks, t),
        tilt=tilt,
        distance=distance_status(landmarks, t),
        presence=Presence.DETECTED,
        lighting=lighting,
    )
