"""Frame luminance measurement and lighting classification.

Mean luma follows ITU-R BT.601 (0.299 R + 0.587 G + 0.114 B) over a small
RGB frame, typically a 64x48 downsample of the camera feed. Classification
bands and the sampling throttle are configurable; the throttle itself is
driven by caller-supplied logical timestamps so it is testable without a
wall clock.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import Lighting

BT601_WEIGHTS = (0.299, 0.587, 0.114)


class InvalidFrameError(ValueError):
    """Frame dimensions and pixel payload disagree."""


@dataclass(frozen=True)
class LumaFrame:
    """Row-major RGB frame; ``pixels`` holds width*height (r, g, b) byte triples."""

    width: int
    height: int
    pixels: bytes

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise InvalidFrameError(f"frame {self.width}x{self.height} is empty")
        if len(self.pixels) != self.width * self.height * 3:
            raise InvalidFrameError(
                f"expected {self.width * self.height * 3} bytes, got {len(self.pixels)}"
            )

    @classmethod
    def constant(cls, width: int, height: int, rgb: tuple[int, int, int]) -> "LumaFrame":
        return cls(width, height, bytes(rgb) * (width * height))


@dataclass(frozen=True)
class LightingThresholds:
    """Luma bands (0-255 scale) and minimum spacing between samples."""

    dark_below: float = 40.0
    bright_above: float = 220.0
    sample_interval_ms: int = 2000

    def __post_init__(self) -> None:
        if not (0.0 <= self.dark_below < self.bright_above <= 255.0):
            raise ValueError("need 0 <= dark_below < bright_above <= 255")
        if self.sample_interval_ms <= 0:
            raise ValueError("sample_interval_ms must be positive")


def mean_luma(frame: LumaFrame) -> float:
    """Mean BT.601 luma of the frame, in [0, 255].

    Accumulation is real-valued; nothing is truncated to integers.
    """
    if frame.width * frame.height == 0:
        raise InvalidFrameError("empty frame")
    rgb = np.frombuffer(frame.pixels, dtype=np.uint8).reshape(-1, 3).astype(np.float64)
    return float(np.mean(rgb @ np.asarray(BT601_WEIGHTS)))


def lighting_status(luma: float, t: LightingThresholds) -> Lighting:
    """Band classification of a luma value."""
    if not (0.0 <= luma <= 255.0):
        raise ValueError(f"luma {luma} outside [0, 255]")
    if luma < t.dark_below:
        return Lighting.TOO_DARK
    if luma > t.bright_above:
        return Lighting.TOO_BRIGHT
    return Lighting.OK


def should_sample(
    now_ms: int, last_sample_ms: Optional[int], t: LightingThresholds
) -> bool:
    """True when a new luminance sample is due at ``now_ms``.

    The first sample is always due; afterwards at least
    ``sample_interval_ms`` of logical time must have elapsed (boundary
    inclusive).
    """
    if last_sample_ms is None:
        return True
    return now_ms - last_sample_ms >= t.sample_interval_ms


def read_frame(path, width: int = 64, height: int = 48) -> LumaFrame:
    """Load a raw RGB24 fixture (no header; row-major byte triples)."""
    with open(path, "rb") as fh:
        return LumaFrame(width, height, fh.read())


def write_frame(path, frame: LumaFrame) -> None:
    with open(path, "wb") as fh:
        fh.write(frame.pixels)
