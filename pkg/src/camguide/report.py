"""Score reports: aligned text, delimited tables, and rendered figures.

The report path writes four artifacts for a systems descriptor set: a
plain-text table, a CSV table with identical numbers, a frontier scatter
in the adaptability / offline-persistence plane, and a grouped bar chart
of utility, friction, and capability score per system.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .metrics import (
    AbilityProfile,
    Environment,
    ScoringConfig,
    SystemDescriptor,
    acb_contains,
    acs,
    friction,
    pareto_frontier,
    utility,
)


@dataclass(frozen=True)
class ScoreRow:
    name: str
    utility: float
    friction: float
    acs: float
    on_frontier: bool


def score_systems(
    systems: Sequence[SystemDescriptor],
    profile: Optional[AbilityProfile] = None,
    env: Optional[Environment] = None,
    cfg: Optional[ScoringConfig] = None,
) -> List[ScoreRow]:
    cfg = cfg or ScoringConfig()
    frontier_names = {s.name for s in pareto_frontier(systems)}
    return [
        ScoreRow(
            name=s.name,
            utility=utility(s.kappa, profile, env, cfg),
            friction=friction(s.kappa, cfg),
            acs=acs(s.kappa, cfg),
            on_frontier=s.name in frontier_names,
        )
        for s in systems
    ]


def membership_line(
    systems: Sequence[SystemDescriptor],
    profile: Optional[AbilityProfile] = None,
    env: Optional[Environment] = None,
    cfg: Optional[ScoringConfig] = None,
) -> str:
    cfg = cfg or ScoringConfig()
    result = acb_contains(systems, profile, env, cfg)
    verdict = "yes" if result.contained else "no"
    return (
        f"membership(theta={cfg.theta:.2f}): {verdict}"
        f" best={result.best_system} U={result.best_utility:.6f}"
    )


def render_text_table(
    rows: Sequence[ScoreRow],
    systems: Sequence[SystemDescriptor],
    profile: Optional[AbilityProfile] = None,
    env: Optional[Environment] = None,
    cfg: Optional[ScoringConfig] = None,
) -> str:
    cfg = cfg or ScoringConfig()
    name_width = max([len(r.name) for r in rows] + [len("system")])
    lines = [
        f"{'system':<{name_width}}  {'U':>8}  {'F':>8}  {'ACS':>8}  frontier"
    ]
    for r in rows:
        lines.append(
            f"{r.name:<{name_width}}  {r.utility:>8.4f}  {r.friction:>8.4f}"
            f"  {r.acs:>8.4f}  {'yes' if r.on_frontier else 'no'}"
        )
    lines.append(membership_line(systems, profile, env, cfg))
    return "\n".join(lines) + "\n"


def render_delimited(rows: Sequence[ScoreRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["system", "U", "F", "ACS", "frontier"])
    for r in rows:
        writer.writerow(
            [r.name, f"{r.utility:.6f}", f"{r.friction:.6f}", f"{r.acs:.6f}",
             "yes" if r.on_frontier else "no"]
        )
    return buf.getvalue()


def render_frontier_figure(
    systems: Sequence[SystemDescriptor], path: Path
) -> None:
    """Scatter the descriptor set in the adaptability / offline plane."""
    frontier_names = {s.name for s in pareto_frontier(systems)}
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    for s in systems:
        on_frontier = s.name in frontier_names
        ax.scatter(
            s.kappa.adaptability,
            s.kappa.offline_persistence,
            s=110 if on_frontier else 60,
            marker="o" if on_frontier else "x",
            color="tab:blue" if on_frontier else "tab:gray",
            zorder=3,
        )
        ax.annotate(
            s.name,
            (s.kappa.adaptability, s.kappa.offline_persistence),
            textcoords="offset points",
            xytext=(6, 6),
            fontsize=8,
        )
    ax.set_xlabel("adaptability")
    ax.set_ylabel("offline persistence")
    ax.set_xlim(-0.05, 1.05)
    ax.set_ylim(-0.05, 1.05)
    ax.grid(True, alpha=0.3)
    ax.set_title("non-dominated systems shown as filled circles")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_scores_figure(rows: Sequence[ScoreRow], path: Path) -> None:
    """Grouped bars of utility, friction, and capability score."""
    idx = range(len(rows))
    width = 0.27
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.bar([i - width for i in idx], [r.utility for r in rows], width, label="U")
    ax.bar(list(idx), [r.friction for r in rows], width, label="F")
    ax.bar([i + width for i in idx], [r.acs for r in rows], width, label="ACS")
    ax.set_xticks(list(idx))
    ax.set_xticklabels([r.name for r in rows], rotation=15, ha="right", fontsize=8)
    ax.set_ylim(0, 1.05)
    ax.legend()
    ax.grid(True, axis="y", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report(
    systems: Sequence[SystemDescriptor],
    out_dir: Path,
    profile: Optional[AbilityProfile] = None,
    env: Optional[Environment] = None,
    cfg: Optional[ScoringConfig] = None,
) -> List[Path]:
    """Write all report artifacts into ``out_dir``; returns the paths."""
    cfg = cfg or ScoringConfig()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = score_systems(systems, profile, env, cfg)

    text_path = out_dir / "scores.txt"
    text_path.write_text(render_text_table(rows, systems, profile, env, cfg), "utf-8")
    csv_path = out_dir / "scores.csv"
    csv_path.write_text(render_delimited(rows), "utf-8")
    frontier_path = out_dir / "frontier.png"
    render_frontier_figure(systems, frontier_path)
    bars_path = out_dir / "scores.png"
    render_scores_figure(rows, bars_path)
    return [text_path, csv_path, frontier_path, bars_path]
