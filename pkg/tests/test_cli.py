from __future__ import annotations

import csv
import io
import json

import pytest

from camguide.cli import EXIT_NOT_CONVERGED, EXIT_OK, EXIT_USAGE, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_centered_fixture(self, capsys, fixtures_dir):
        code, out, _ = run_cli(capsys, "analyze", str(fixtures_dir / "centered.snapshot"))
        assert code == EXIT_OK
        line = out.strip()
        for token in ("presence=Detected", "horizontal=Centered", "vertical=Ok",
                      "tilt=Level", "distance=Ok"):
            assert token in line

    def test_noface_flagged_raw(self, capsys, fixtures_dir):
        code, out, _ = run_cli(capsys, "analyze", str(fixtures_dir / "noface10.snapshot"))
        assert code == EXIT_OK
        assert out.count("presence=Lost") == 10

    def test_malformed_line_number_and_exit(self, capsys, fixtures_dir):
        code, _, err = run_cli(capsys, "analyze", str(fixtures_dir / "malformed.snapshot"))
        assert code == EXIT_USAGE
        assert "line 2" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "analyze", str(tmp_path / "nope.snapshot"))
        assert code == EXIT_USAGE


class TestSimulate:
    def test_convergent_run_exit_zero(self, capsys, tmp_path):
        out_file = tmp_path / "t.trace"
        code, out, _ = run_cli(
            capsys, "simulate", "--x-offset", "0.3", "--compliance", "1.0",
            "--noise", "0", "--seed", "7", "--out", str(out_file),
        )
        assert code == EXIT_OK
        assert "converged=true" in out
        assert out_file.exists()

    def test_immobile_user_exit_three(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "simulate", "--compliance", "0", "--x-offset", "0.3",
            "--noise", "0", "--out", str(tmp_path / "t.trace"),
        )
        assert code == EXIT_NOT_CONVERGED
        assert "converged=false" in out

    def test_repeated_seed_identical_bytes(self, capsys, tmp_path):
        paths = [tmp_path / f"run{i}.trace" for i in range(3)]
        for path in paths:
            code, _, _ = run_cli(
                capsys, "simulate", "--x-offset", "0.25", "--seed", "123",
                "--out", str(path),
            )
            assert code == EXIT_OK
        blobs = [p.read_bytes() for p in paths]
        assert blobs[0] == blobs[1] == blobs[2]

    def test_invalid_flags(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "simulate", "--compliance", "1.5", "--out", str(tmp_path / "t"),
        )
        assert code == EXIT_USAGE
        assert "compliance" in err

    def test_sweep_prints_per_combo_summaries(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "simulate", "--noise", "0",
            "--sweep", "x_offset=-0.2:0.2:3;compliance=0.5:1.0:2",
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert len(lines) == 7  # 6 combos + aggregate line
        assert lines[-1] == "sweep combos=6 all_converged=true"

    def test_sweep_bad_spec(self, capsys):
        code, _, err = run_cli(capsys, "simulate", "--sweep", "x_offset=1:2")
        assert code == EXIT_USAGE


class TestReplayCommand:
    def test_replay_to_stdout(self, capsys, fixtures_dir):
        code, out, _ = run_cli(capsys, "replay", str(fixtures_dir / "noface10.snapshot"))
        assert code == EXIT_OK
        assert "ev=no_face" in out
        assert "converged=false cycles=1 frames=10" in out


class TestScore:
    def test_builtin_table_rows(self, capsys):
        code, out, _ = run_cli(capsys, "score", "table1")
        assert code == EXIT_OK
        assert "Traditional AT" in out
        assert "Probe 1 (AI-Gen)" in out
        assert "membership(theta=0.50)" in out

    def test_csv_format_values(self, capsys):
        code, out, _ = run_cli(capsys, "score", "table1", "--format", "csv")
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out.split("membership")[0])))
        by_name = {r["system"]: r for r in rows}
        trad = by_name["Traditional AT"]
        probe = by_name["Probe 1 (AI-Gen)"]
        assert float(trad["F"]) == pytest.approx(0.64, abs=1e-6)
        assert float(probe["F"]) == pytest.approx(0.14, abs=1e-6)
        assert float(probe["ACS"]) > float(trad["ACS"])
        assert trad["frontier"] == "yes" and probe["frontier"] == "yes"

    def test_high_theta_membership_no(self, capsys):
        code, out, _ = run_cli(capsys, "score", "table1", "--theta", "0.99")
        assert code == EXIT_OK
        assert "membership(theta=0.99): no" in out

    def test_empty_systems_file(self, capsys, tmp_path):
        empty = tmp_path / "none.systems"
        empty.write_text("# nothing here\n")
        code, _, err = run_cli(capsys, "score", str(empty))
        assert code == EXIT_USAGE

    def test_parse_error_exit(self, capsys, tmp_path):
        bad = tmp_path / "bad.systems"
        bad.write_text("Name only, no fields\n")
        code, _, err = run_cli(capsys, "score", str(bad))
        assert code == EXIT_USAGE
        assert "line 1" in err

    def test_unknown_set(self, capsys):
        code, _, err = run_cli(capsys, "score", "table9")
        assert code == EXIT_USAGE

    def test_profile_env_flags(self, capsys):
        code, out, _ = run_cli(
            capsys, "score", "table1", "--profile", "0.0,1.0,0.3,1.0",
            "--env", "0.2,1,0.1",
        )
        assert code == EXIT_OK
        assert "membership" in out

    def test_output_stable_across_runs(self, capsys):
        _, first, _ = run_cli(capsys, "score", "table1", "--format", "csv")
        _, second, _ = run_cli(capsys, "score", "table1", "--format", "csv")
        assert first == second


class TestReport:
    def test_writes_tables_and_figures(self, capsys, tmp_path):
        out_dir = tmp_path / "report"
        code, out, _ = run_cli(capsys, "report", "fig1", "--out-dir", str(out_dir))
        assert code == EXIT_OK
        names = sorted(p.name for p in out_dir.iterdir())
        assert names == ["frontier.png", "scores.csv", "scores.png", "scores.txt"]
        for png in ("frontier.png", "scores.png"):
            assert (out_dir / png).read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
        rows = list(csv.DictReader((out_dir / "scores.csv").open()))
        assert len(rows) == 3
        text = (out_dir / "scores.txt").read_text()
        assert "membership(theta=0.50)" in text


class TestBench:
    def test_single_iteration(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--iterations", "1")
        assert code == EXIT_OK
        assert out.startswith("iterations=1 median_ms=")

    def test_zero_iterations_rejected(self, capsys):
        code, _, err = run_cli(capsys, "bench", "--iterations", "0")
        assert code == EXIT_USAGE


class TestConfigFile:
    def test_config_overrides_thresholds(self, capsys, tmp_path, fixtures_dir):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"spatial": {"horizontal_tolerance": 0.5}}))
        # nose at 0.30 is inside a +/-0.5 band, so no TooLeft with the override
        code, out, _ = run_cli(
            capsys, "analyze", str(fixtures_dir / "two_misaligned_4000ms.snapshot"),
            "--config", str(config),
        )
        assert code == EXIT_OK
        assert "horizontal=Centered" in out

    def test_env_var_config(self, capsys, tmp_path, fixtures_dir, monkeypatch):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"spatial": {"horizontal_tolerance": 0.5}}))
        monkeypatch.setenv("CAMGUIDE_CONFIG", str(config))
        code, out, _ = run_cli(
            capsys, "analyze", str(fixtures_dir / "two_misaligned_4000ms.snapshot")
        )
        assert code == EXIT_OK
        assert "horizontal=Centered" in out

    def test_bad_config_rejected(self, capsys, tmp_path, fixtures_dir):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"spatial": {"bogus_knob": 1}}))
        code, _, err = run_cli(
            capsys, "analyze", str(fixtures_dir / "centered.snapshot"),
            "--config", str(config),
        )
        assert code == EXIT_USAGE

    def test_unknown_section_rejected(self, capsys, tmp_path, fixtures_dir):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"sptial": {}}))
        code, _, err = run_cli(
            capsys, "analyze", str(fixtures_dir / "centered.snapshot"),
            "--config", str(config),
        )
        assert code == EXIT_USAGE
