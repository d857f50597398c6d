from __future__ import annotations

import statistics

import pytest

from camguide.engine import AXIS_BY_KEY, KEY_ALIGNED, KEY_NO_FACE
from camguide.geometry import Distance, Horizontal, SpatialThresholds, Tilt, Vertical, analyze, Lighting
from camguide.simulator import (
    SimConfig,
    SplitMix64,
    UserModel,
    project,
    project_pose,
    replay,
    run,
    summary_line,
    trace_to_text,
)
from camguide.snapshots import read_snapshot

T = SpatialThresholds()


class TestSplitMix64:
    def test_known_stream_for_seed_zero(self):
        # reference vector for splitmix64 seeded with 0
        rng = SplitMix64(0)
        assert rng.next_u64() == 0xE220A8397B1DCDAF

    def test_deterministic_per_seed(self):
        a = SplitMix64(1234)
        b = SplitMix64(1234)
        assert [a.next_u64() for _ in range(20)] == [b.next_u64() for _ in range(20)]

    def test_uniform_range(self):
        rng = SplitMix64(7)
        values = [rng.uniform() for _ in range(1000)]
        assert all(0.0 <= v < 1.0 for v in values)

    def test_gauss_moments(self):
        rng = SplitMix64(42)
        draws = [rng.gauss() for _ in range(20000)]
        assert statistics.fmean(draws) == pytest.approx(0.0, abs=0.05)
        assert statistics.stdev(draws) == pytest.approx(1.0, abs=0.05)


class TestProject:
    def test_identity_placement(self):
        lm = project_pose(0.0, 0.42, 0.30, 0.0)
        assert lm.nose.x == 0.5
        assert lm.nose.y == 0.42
        assert lm.bbox_width == 0.30
        assert lm.left_eye_outer.y == lm.right_eye_outer.y == 0.42
        assert lm.right_eye_outer.x - lm.left_eye_outer.x == pytest.approx(
            2 * 0.35 * 0.30
        )

    def test_bbox_height_ratio(self):
        lm = project_pose(0.0, 0.42, 0.30, 0.0)
        assert lm.bbox_height == pytest.approx(1.3 * 0.30)

    def test_tilt_round_trip(self):
        from camguide.geometry import tilt_status

        for angle in (14.04, -14.04, 3.0, 45.0, -30.0):
            lm = project_pose(0.0, 0.42, 0.30, angle)
            _, measured = tilt_status(lm, T)
            assert measured == pytest.approx(angle, abs=1e-6)

    def test_clamping_at_edge(self):
        lm = project_pose(0.5, 0.42, 0.30, 0.0)
        assert lm.nose.x == 1.0

    def test_round_trip_classification_matches_direct_thresholds(self):
        # inside the unclamped region, analyzing a projection must agree with
        # comparing the pose fields against the thresholds directly
        cases = [
            (0.0, 0.42, 0.30, 0.0),
            (0.2, 0.42, 0.30, 0.0),
            (-0.2, 0.42, 0.30, 0.0),
            (0.0, 0.25, 0.30, 0.0),
            (0.0, 0.60, 0.30, 0.0),
            (0.0, 0.42, 0.12, 0.0),
            (0.0, 0.42, 0.50, 0.0),
            (0.0, 0.42, 0.30, 12.0),
            (0.0, 0.42, 0.30, -12.0),
        ]
        for x, y, w, tilt in cases:
            state = analyze(project_pose(x, y, w, tilt), Lighting.UNKNOWN, T)
            if abs(x) <= T.horizontal_tolerance:
                assert state.horizontal is Horizontal.CENTERED
            elif x < 0:
                assert state.horizontal is Horizontal.TOO_LEFT
            else:
                assert state.horizontal is Horizontal.TOO_RIGHT
            if abs(y - T.vertical_ideal) <= T.vertical_tolerance:
                assert state.vertical is Vertical.OK
            if abs(tilt) < T.tilt_tolerance_deg:
                assert state.tilt is Tilt.LEVEL
            elif tilt > 0:
                assert state.tilt is Tilt.CLOCKWISE
            else:
                assert state.tilt is Tilt.COUNTER_CLOCKWISE
            if T.distance_far_width <= w <= T.distance_near_width:
                assert state.distance is Distance.OK

    def test_project_reads_user_model(self):
        user = UserModel(x_offset=0.1, y_center=0.5, face_width=0.25, tilt_deg=5.0)
        assert project(user) == project_pose(0.1, 0.5, 0.25, 5.0)


class TestRun:
    def test_aligned_start_converges_with_single_confirmation(self):
        user = UserModel(noise_sigma=0.0)
        trace = run(user)
        assert trace.converged
        assert trace.cycles_used == 1
        assert trace.frames[0].event is not None
        assert trace.frames[0].event.key == KEY_ALIGNED

    def test_full_compliance_converges_monotonically(self):
        user = UserModel(x_offset=0.30, compliance=1.0, reaction_frames=0, noise_sigma=0.0)
        trace = run(user)
        assert trace.converged
        first_event = next(r.event for r in trace.frames if r.event is not None)
        assert AXIS_BY_KEY[first_event.key] in ("horizontal", "distance")
        offsets = [abs(r.pose[0]) for r in trace.frames]
        assert all(b <= a + 1e-12 for a, b in zip(offsets, offsets[1:]))

    def test_zero_compliance_never_converges(self):
        user = UserModel(x_offset=0.30, compliance=0.0, noise_sigma=0.0)
        trace = run(user)
        assert not trace.converged
        assert trace.cycles_used == SimConfig().max_cycles

    def test_deterministic_trace_bytes(self):
        user = UserModel(x_offset=0.25, y_center=0.3, tilt_deg=15.0, seed=99)
        first = trace_to_text(run(user))
        second = trace_to_text(run(user))
        assert first == second

    def test_different_seeds_differ(self):
        base = dict(x_offset=0.25, noise_sigma=0.01)
        a = trace_to_text(run(UserModel(seed=1, **base)))
        b = trace_to_text(run(UserModel(seed=2, **base)))
        assert a != b

    def test_event_spacing_respects_debounce(self):
        user = UserModel(x_offset=0.4, y_center=0.2, face_width=0.1, tilt_deg=25.0,
                         compliance=0.4, seed=5)
        trace = run(user)
        times = [r.event.timestamp_ms for r in trace.frames if r.event is not None]
        assert all(b - a >= 4000 for a, b in zip(times, times[1:]))

    def test_timestamps_advance_by_frame_interval(self):
        trace = run(UserModel(noise_sigma=0.0))
        times = [r.timestamp_ms for r in trace.frames]
        assert times == list(range(0, len(times) * 33, 33))

    def test_record_frames_off_keeps_summary(self):
        user = UserModel(x_offset=0.30, compliance=1.0, noise_sigma=0.0)
        full = run(user)
        light = run(user, record_frames=False)
        assert light.frames == []
        assert (light.converged, light.cycles_used, light.frames_used) == (
            full.converged,
            full.cycles_used,
            full.frames_used,
        )

    def test_converged_tail_is_all_ok(self):
        trace = run(UserModel(x_offset=0.3, compliance=0.8, seed=3))
        assert trace.converged
        hold = SimConfig().convergence_hold_frames
        tail = trace.frames[-hold:]
        assert all(r.alignment.all_ok() for r in tail)

    def test_summary_line_format(self):
        trace = run(UserModel(noise_sigma=0.0, seed=11))
        line = summary_line(trace)
        assert line == (
            f"converged=true cycles={trace.cycles_used} frames={trace.frames_used} seed=11"
        )


class TestReplay:
    def test_noface_fixture_single_loss_event(self, fixtures_dir):
        trace = replay(fixtures_dir / "noface10.snapshot")
        events = [r.event for r in trace.frames if r.event is not None]
        assert [e.key for e in events] == [KEY_NO_FACE]
        # the tenth frame (index 9) is where the run length reaches 10
        assert trace.frames.index(
            next(r for r in trace.frames if r.event is not None)
        ) == 9

    def test_debounce_fixture_two_events(self, fixtures_dir):
        trace = replay(fixtures_dir / "two_misaligned_4000ms.snapshot")
        events = [r.event for r in trace.frames if r.event is not None]
        assert len(events) == 2
        assert events[1].timestamp_ms - events[0].timestamp_ms == 4000

    def test_empty_file(self, fixtures_dir):
        trace = replay(fixtures_dir / "empty.snapshot")
        assert trace.frames == []
        assert not trace.converged
        assert summary_line(trace).startswith("converged=false cycles=0 frames=0")

    def test_replay_is_deterministic(self, fixtures_dir):
        path = fixtures_dir / "two_misaligned_4000ms.snapshot"
        assert trace_to_text(replay(path)) == trace_to_text(replay(path))

    def test_malformed_reports_line_number(self, fixtures_dir):
        from camguide.snapshots import SnapshotParseError

        with pytest.raises(SnapshotParseError, match="line 2"):
            replay(fixtures_dir / "malformed.snapshot")


class TestSnapshotFormat:
    def test_roundtrip(self, fixtures_dir, tmp_path):
        import io

        from camguide.snapshots import write_snapshot

        observations = read_snapshot(fixtures_dir / "two_misaligned_4000ms.snapshot")
        buf = io.StringIO()
        write_snapshot(buf, observations)
        reparsed = list(read_snapshot_lines(buf.getvalue()))
        assert len(reparsed) == len(observations)
        assert reparsed[0].timestamp_ms == observations[0].timestamp_ms
        assert reparsed[0].landmarks.nose.x == pytest.approx(
            observations[0].landmarks.nose.x
        )

    def test_comments_and_blanks_skipped(self):
        parsed = read_snapshot_lines("# header\n\n0 NOFACE\n")
        assert len(parsed) == 1
        assert parsed[0].landmarks is None


def read_snapshot_lines(text):
    from camguide.snapshots import parse_snapshot

    return parse_snapshot(text.splitlines())


class TestUserModelValidation:
    def test_ranges(self):
        with pytest.raises(ValueError):
            UserModel(compliance=1.5)
        with pytest.raises(ValueError):
            UserModel(reaction_frames=-1)
        with pytest.raises(ValueError):
            UserModel(noise_sigma=-0.1)
        with pytest.raises(ValueError):
            SimConfig(frame_interval_ms=0)


class TestGoldenTraces:
    def test_noface_replay_matches_golden(self, fixtures_dir):
        golden = (fixtures_dir / "golden_noface10.trace").read_text()
        assert trace_to_text(replay(fixtures_dir / "noface10.snapshot")) == golden

    def test_simulation_matches_golden(self, fixtures_dir):
        golden = (fixtures_dir / "golden_sim_seed42.trace").read_text()
        trace = run(UserModel(x_offset=0.30, y_center=0.30, compliance=0.7, seed=42))
        assert trace_to_text(trace) == golden
