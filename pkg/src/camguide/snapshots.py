"""Line-oriented landmark snapshot files.

One record per frame:

    <timestamp_ms> nose <x> <y> eyeL <x> <y> eyeR <x> <y> bbox <cx> <cy> <w> <h>
    <timestamp_ms> NOFACE

Blank lines and lines starting with ``#`` are skipped. Parse failures
report the 1-based line number.
"""

from __future__ import annotations

from typing import Iterable, List, TextIO, Union

from .engine import Observation
from .geometry import FaceLandmarks, InvalidLandmarksError, Point2


class SnapshotParseError(ValueError):
    """Malformed snapshot line; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _parse_record(line_no: int, parts: List[str]) -> Observation:
    try:
        timestamp = int(parts[0])
    except ValueError:
        raise SnapshotParseError(line_no, f"bad timestamp {parts[0]!r}") from None
    if len(parts) == 2 and parts[1] == "NOFACE":
        return Observation(timestamp_ms=timestamp, landmarks=None)
    if len(parts) != 15 or parts[1] != "nose" or parts[4] != "eyeL" or parts[7] != "eyeR" or parts[10] != "bbox":
        raise SnapshotParseError(
            line_no, "expected 'nose x y eyeL x y eyeR x y bbox cx cy w h' or 'NOFACE'"
        )
    try:
        nums = [float(p) for p in parts[2:4] + parts[5:7] + parts[8:10] + parts[11:15]]
    except ValueError:
        raise SnapshotParseError(line_no, "non-numeric landmark field") from None
    try:
        landmarks = FaceLandmarks(
            nose=Point2(nums[0], nums[1]),
            left_eye_outer=Point2(nums[2], nums[3]),
            right_eye_outer=Point2(nums[4], nums[5]),
            bbox_center=Point2(nums[6], nums[7]),
            bbox_width=nums[8],
            bbox_height=nums[9],
        )
    except InvalidLandmarksError as exc:
        raise SnapshotParseError(line_no, str(exc)) from None
    return Observation(timestamp_ms=timestamp, landmarks=landmarks)


def parse_snapshot(lines: Iterable[str]) -> List[Observation]:
    observations: List[Observation] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        observations.append(_parse_record(line_no, line.split()))
    return observations


def read_snapshot(path: Union[str, "object"]) -> List[Observation]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_snapshot(fh)


def format_record(obs: Observation) -> str:
    if obs.landmarks is None:
        return f"{obs.timestamp_ms} NOFACE"
    lm = obs.landmarks
    return (
        f"{obs.timestamp_ms}"
        f" nose {lm.nose.x:.6f} {lm.nose.y:.6f}"
        f" eyeL {lm.left_eye_outer.x:.6f} {lm.left_eye_outer.y:.6f}"
        f" eyeR {lm.right_eye_outer.x:.6f} {lm.right_eye_outer.y:.6f}"
        f" bbox {lm.bbox_center.x:.6f} {lm.bbox_center.y:.6f}"
        f" {lm.bbox_width:.6f} {lm.bbox_height:.6f}"
    )


def write_snapshot(fh: TextIO, observations: Iterable[Observation]) -> None:
    for obs in observations:
        fh.write(format_record(obs) + "\n")
