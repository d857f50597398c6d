"""Command-line surface: analyze, simulate, score, report, bench."""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path
from typing import List, Optional

from . import simulator
from .config import AppConfig, ConfigError, load_config
from .engine import EngineState, Observation, default_catalog, step
from .geometry import analyze
from .luminance import LumaFrame
from .metrics import (
    BUILTIN_SYSTEM_SETS,
    AbilityProfile,
    Environment,
    ScoringConfig,
    ScoringError,
    SystemDescriptor,
    SystemsParseError,
    load_builtin_systems,
    read_systems,
)
from .report import membership_line, render_delimited, render_text_table, score_systems, write_report
from .snapshots import SnapshotParseError, read_snapshot

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_CONVERGED = 3


def _fail(message: str, code: int = EXIT_USAGE) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_app_config(path: Optional[str]) -> AppConfig:
    return load_config(path)


def _resolve_systems(spec: str) -> List[SystemDescriptor]:
    path = Path(spec)
    if path.exists():
        systems = read_systems(path)
    else:
        name = spec[:-len(".systems")] if spec.endswith(".systems") else spec
        if name in BUILTIN_SYSTEM_SETS:
            systems = load_builtin_systems(name)
        else:
            raise FileNotFoundError(f"no systems file or builtin set named {spec!r}")
    if not systems:
        raise ScoringError(f"systems file {spec!r} contains no systems")
    return systems


def _parse_profile(text: Optional[str]) -> Optional[AbilityProfile]:
    if text is None:
        return None
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError("profile needs four values: visual,motor,cognitive,hearing")
    return AbilityProfile(*parts)


def _parse_env(text: Optional[str]) -> Optional[Environment]:
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("environment needs three values: bandwidth,hardware,connectivity")
    return Environment(float(parts[0]), int(parts[1]), float(parts[2]))


def _parse_weights(text: Optional[str]) -> Optional[dict]:
    if text is None:
        return None
    weights = {}
    for token in text.split(","):
        dim, _, value = token.partition("=")
        if not value:
            raise ValueError(f"bad weight token {token!r}, expected dim=value")
        weights[dim.strip()] = float(value)
    return weights


def _scoring_config(args, base: ScoringConfig) -> ScoringConfig:
    kwargs = {}
    weights = _parse_weights(args.weights)
    if weights is not None:
        kwargs["weights"] = weights
    elif base.weights is not None:
        kwargs["weights"] = base.weights
    theta = args.theta if args.theta is not None else base.theta
    return ScoringConfig(
        theta=theta,
        coeff_deploy=base.coeff_deploy,
        coeff_cognitive=base.coeff_cognitive,
        coeff_steps=base.coeff_steps,
        coeff_offline_gap=base.coeff_offline_gap,
        coeff_infra=base.coeff_infra,
        steps_normalizer=base.steps_normalizer,
        **kwargs,
    )


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    try:
        cfg = _load_app_config(args.config)
        observations = read_snapshot(args.snapshot)
    except (SnapshotParseError, ConfigError, OSError) as exc:
        return _fail(str(exc))
    lighting_default = EngineState().current_lighting
    for i, obs in enumerate(observations, start=1):
        state = analyze(obs.landmarks, lighting_default, cfg.engine.spatial)
        print(
            f"frame={i} t={obs.timestamp_ms}"
            f" presence={state.presence.value}"
            f" horizontal={state.horizontal.value}"
            f" vertical={state.vertical.value}"
            f" tilt={state.tilt.value}"
            f" distance={state.distance.value}"
            f" lighting={state.lighting.value}"
        )
    return EXIT_OK


def _parse_sweep(spec: str) -> List[dict]:
    """Expand 'dim=start:stop:count;dim2=...' into a combination grid."""
    axes = []
    for clause in spec.split(";"):
        dim, _, rng = clause.partition("=")
        dim = dim.strip()
        if not rng:
            raise ValueError(f"bad sweep clause {clause!r}")
        parts = rng.split(":")
        if len(parts) == 1:
            values = [float(parts[0])]
        elif len(parts) == 3:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
            if count < 1:
                raise ValueError(f"sweep count must be >= 1 in {clause!r}")
            if count == 1:
                values = [start]
            else:
                stepsize = (stop - start) / (count - 1)
                values = [start + i * stepsize for i in range(count)]
        else:
            raise ValueError(f"bad sweep range {rng!r}, expected start:stop:count")
        axes.append((dim, values))
    combos: List[dict] = [{}]
    for dim, values in axes:
        combos = [dict(c, **{dim: v}) for c in combos for v in values]
    return combos


def cmd_simulate(args) -> int:
    try:
        cfg = _load_app_config(args.config)
    except (ConfigError, OSError) as exc:
        return _fail(str(exc))

    if args.sweep:
        try:
            combos = _parse_sweep(args.sweep)
        except ValueError as exc:
            return _fail(str(exc))
        all_converged = True
        for combo in combos:
            params = dict(
                x_offset=args.x_offset,
                y_center=args.y_center,
                face_width=args.face_width,
                tilt_deg=args.tilt,
                compliance=args.compliance,
                reaction_frames=args.reaction,
                noise_sigma=args.noise,
                seed=args.seed,
            )
            for dim, value in combo.items():
                if dim not in params:
                    return _fail(f"unknown sweep dimension {dim!r}")
                params[dim] = int(value) if dim in ("reaction_frames", "seed") else value
            try:
                user = simulator.UserModel(**params)
            except ValueError as exc:
                return _fail(str(exc))
            trace = simulator.run(user, cfg.engine, cfg.sim, record_frames=False)
            label = " ".join(f"{k}={v:g}" if isinstance(v, float) else f"{k}={v}"
                             for k, v in sorted(combo.items()))
            print(f"{label} {simulator.summary_line(trace)}")
            all_converged = all_converged and trace.converged
        print(f"sweep combos={len(combos)} all_converged={'true' if all_converged else 'false'}")
        return EXIT_OK if all_converged else EXIT_NOT_CONVERGED

    try:
        user = simulator.UserModel(
            x_offset=args.x_offset,
            y_center=args.y_center,
            face_width=args.face_width,
            tilt_deg=args.tilt,
            compliance=args.compliance,
            reaction_frames=args.reaction,
            noise_sigma=args.noise,
            seed=args.seed,
        )
    except ValueError as exc:
        return _fail(str(exc))
    trace = simulator.run(user, cfg.engine, cfg.sim)
    out_path = Path(args.out)
    with open(out_path, "w", encoding="utf-8") as fh:
        simulator.write_trace(fh, trace)
    print(simulator.summary_line(trace))
    return EXIT_OK if trace.converged else EXIT_NOT_CONVERGED


def cmd_replay(args) -> int:
    try:
        cfg = _load_app_config(args.config)
        trace = simulator.replay(args.snapshot, cfg.engine, sim_cfg=cfg.sim)
    except (SnapshotParseError, ConfigError, OSError) as exc:
        return _fail(str(exc))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            simulator.write_trace(fh, trace)
        print(simulator.summary_line(trace))
    else:
        simulator.write_trace(sys.stdout, trace)
    return EXIT_OK


def cmd_score(args) -> int:
    try:
        cfg = _load_app_config(args.config)
        systems = _resolve_systems(args.systems)
        profile = _parse_profile(args.profile)
        env = _parse_env(args.env)
        scoring = _scoring_config(args, cfg.scoring)
        rows = score_systems(systems, profile, env, scoring)
    except (SystemsParseError, ScoringError, ConfigError, OSError, ValueError) as exc:
        return _fail(str(exc))
    if args.format == "csv":
        sys.stdout.write(render_delimited(rows))
        print(membership_line(systems, profile, env, scoring))
    else:
        sys.stdout.write(render_text_table(rows, systems, profile, env, scoring))
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        cfg = _load_app_config(args.config)
        systems = _resolve_systems(args.systems)
        profile = _parse_profile(args.profile)
        env = _parse_env(args.env)
        scoring = _scoring_config(args, cfg.scoring)
        paths = write_report(systems, Path(args.out_dir), profile, env, scoring)
    except (SystemsParseError, ScoringError, ConfigError, OSError, ValueError) as exc:
        return _fail(str(exc))
    for path in paths:
        print(path)
    return EXIT_OK


def _synthetic_observations(count: int) -> List[Observation]:
    poses = [
        (0.0, 0.42, 0.30, 0.0),
        (-0.25, 0.42, 0.30, 0.0),
        (0.2, 0.6, 0.30, 12.0),
        (0.0, 0.42, 0.12, 0.0),
        (0.0, 0.30, 0.5, -10.0),
    ]
    gray = LumaFrame.constant(64, 48, (128, 128, 128))
    observations = []
    for i in range(count):
        x, y, w, t = poses[i % len(poses)]
        lm = simulator.project_pose(x, y, w, t)
        observations.append(Observation(timestamp_ms=i * 33, landmarks=lm, luma=gray))
    return observations


def cmd_bench(args) -> int:
    if args.iterations < 1:
        return _fail("iterations must be at least 1")
    try:
        cfg = _load_app_config(args.config)
    except (ConfigError, OSError) as exc:
        return _fail(str(exc))
    catalog = default_catalog()
    observations = _synthetic_observations(args.iterations)
    state = EngineState()
    samples_ns = []
    for obs in observations:
        start = time.perf_counter_ns()
        state, _ = step(state, obs, cfg.engine, catalog)
        samples_ns.append(time.perf_counter_ns() - start)
    samples_ms = sorted(n / 1e6 for n in samples_ns)
    median = statistics.median(samples_ms)
    p99 = samples_ms[min(len(samples_ms) - 1, int(0.99 * len(samples_ms)))]
    print(f"iterations={args.iterations} median_ms={median:.6f} p99_ms={p99:.6f}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="camguide",
        description="Webcam alignment guidance engine, simulator, and capability scoring",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify each frame of a landmark snapshot file")
    p.add_argument("snapshot")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("simulate", help="run the closed-loop simulation")
    p.add_argument("--x-offset", type=float, default=0.0)
    p.add_argument("--y-center", type=float, default=0.42)
    p.add_argument("--face-width", type=float, default=0.30)
    p.add_argument("--tilt", type=float, default=0.0)
    p.add_argument("--compliance", type=float, default=0.5)
    p.add_argument("--reaction", type=int, default=3)
    p.add_argument("--noise", type=float, default=0.005)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="session.trace")
    p.add_argument("--sweep", default=None,
                   help="grid spec 'dim=start:stop:count;dim2=value'; prints one summary per combo")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("replay", help="feed a landmark snapshot through the engine")
    p.add_argument("snapshot")
    p.add_argument("--out", default=None)
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("score", help="score a systems descriptor file")
    p.add_argument("systems")
    p.add_argument("--profile", default=None, help="visual,motor,cognitive,hearing")
    p.add_argument("--env", default=None, help="bandwidth,hardware,connectivity")
    p.add_argument("--weights", default=None, help="dim=value,...")
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("report", help="write score tables and figures to a directory")
    p.add_argument("systems")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--profile", default=None)
    p.add_argument("--env", default=None)
    p.add_argument("--weights", default=None)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("bench", help="measure engine step latency on synthetic frames")
    p.add_argument("--iterations", type=int, default=10000)
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
