from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from camguide.geometry import Lighting
from camguide.luminance import (
    InvalidFrameError,
    LightingThresholds,
    LumaFrame,
    lighting_status,
    mean_luma,
    should_sample,
)

LT = LightingThresholds()


class TestMeanLuma:
    def test_black(self):
        assert mean_luma(LumaFrame.constant(64, 48, (0, 0, 0))) == 0.0

    def test_white_coefficients_sum_to_one(self):
        assert mean_luma(LumaFrame.constant(64, 48, (255, 255, 255))) == pytest.approx(
            255.0, abs=1e-6
        )

    @pytest.mark.parametrize(
        "rgb,expected",
        [
            ((255, 0, 0), 0.299 * 255),
            ((0, 255, 0), 0.587 * 255),
            ((0, 0, 255), 0.114 * 255),
        ],
    )
    def test_pure_channels(self, rgb, expected):
        assert mean_luma(LumaFrame.constant(64, 48, rgb)) == pytest.approx(
            expected, abs=1e-6
        )

    def test_constant_color_independent_of_size(self):
        rgb = (120, 33, 209)
        expected = 0.299 * 120 + 0.587 * 33 + 0.114 * 209
        for w, h in [(1, 1), (3, 7), (64, 48), (10, 1)]:
            assert mean_luma(LumaFrame.constant(w, h, rgb)) == pytest.approx(
                expected, abs=1e-9
            )

    @given(st.lists(st.tuples(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255)),
                    min_size=1, max_size=64),
           st.integers(0, 2**32 - 1))
    def test_permutation_invariance(self, pixels, seed):
        shuffled = list(pixels)
        random.Random(seed).shuffle(shuffled)
        flat = bytes(c for px in pixels for c in px)
        flat_shuffled = bytes(c for px in shuffled for c in px)
        a = mean_luma(LumaFrame(len(pixels), 1, flat))
        b = mean_luma(LumaFrame(len(shuffled), 1, flat_shuffled))
        assert a == pytest.approx(b, abs=1e-9)

    def test_channel_scaling(self):
        # pixel values divisible by 4 so the scaled bytes stay exact
        base = [(200, 120, 84), (40, 4, 252), (96, 96, 0), (8, 244, 16)]
        flat = bytes(c for px in base for c in px)
        reference = mean_luma(LumaFrame(4, 1, flat))
        for scale in (0.25, 0.5, 0.75):
            scaled = bytes(int(c * scale) for px in base for c in px)
            assert mean_luma(LumaFrame(4, 1, scaled)) == pytest.approx(
                scale * reference, abs=1e-9
            )

    def test_invalid_frames(self):
        with pytest.raises(InvalidFrameError):
            LumaFrame(0, 48, b"")
        with pytest.raises(InvalidFrameError):
            LumaFrame(64, 48, b"\x00" * 10)

    def test_gradient_fixture_golden(self, fixtures_dir):
        from camguide.luminance import read_frame

        frame = read_frame(fixtures_dir / "gradient_64x48.rgb")
        # gray ramp: column x holds int(x * 255 / 63) on all three channels
        column_mean = sum(int(x * 255 / 63) for x in range(64)) / 64
        expected = column_mean * (0.299 + 0.587 + 0.114)
        assert mean_luma(frame) == pytest.approx(expected, abs=1e-9)


class TestLightingStatus:
    @pytest.mark.parametrize(
        "luma,expected",
        [
            (0.0, Lighting.TOO_DARK),
            (39.999, Lighting.TOO_DARK),
            (40.0, Lighting.OK),
            (128.0, Lighting.OK),
            (220.0, Lighting.OK),
            (220.001, Lighting.TOO_BRIGHT),
            (255.0, Lighting.TOO_BRIGHT),
        ],
    )
    def test_bands(self, luma, expected):
        assert lighting_status(luma, LT) is expected

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            lighting_status(-1.0, LT)
        with pytest.raises(ValueError):
            lighting_status(256.0, LT)

    def test_threshold_invariants(self):
        with pytest.raises(ValueError):
            LightingThresholds(dark_below=230, bright_above=220)
        with pytest.raises(ValueError):
            LightingThresholds(sample_interval_ms=0)


class TestShouldSample:
    def test_first_sample_always_due(self):
        assert should_sample(0, None, LT)

    def test_below_interval(self):
        assert not should_sample(1999, 0, LT)

    def test_boundary_inclusive(self):
        assert should_sample(2000, 0, LT)

    @given(st.integers(0, 10**7), st.integers(0, 10**7))
    def test_spacing_property(self, last, delta):
        now = last + delta
        assert should_sample(now, last, LT) == (delta >= LT.sample_interval_ms)
