from __future__ import annotations

from pathlib import Path

import pytest

from camguide.geometry import FaceLandmarks, Point2

FIXTURES = Path(__file__).parent / "fixtures"


def make_landmarks(
    nose_x: float = 0.5,
    nose_y: float = 0.42,
    eye_left=(0.4, 0.42),
    eye_right=(0.6, 0.42),
    bbox_center=None,
    bbox_width: float = 0.30,
    bbox_height: float = 0.39,
) -> FaceLandmarks:
    if bbox_center is None:
        bbox_center = (nose_x, nose_y)
    return FaceLandmarks(
        nose=Point2(nose_x, nose_y),
        left_eye_outer=Point2(*eye_left),
        right_eye_outer=Point2(*eye_right),
        bbox_center=Point2(*bbox_center),
        bbox_width=bbox_width,
        bbox_height=bbox_height,
    )


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
