"""Capability scoring for accessibility systems.

A system is characterized by an eight-dimensional constraint vector:
three unit-interval costs (deployment latency, cognitive load,
infrastructure dependency), four unit-interval benefits (offline
persistence, adaptability, assistive compatibility, localization
coverage) and one step count (interaction complexity).

Scores built on top of it:

* ``utility``: weighted mean of per-dimension component utilities, in
  [0, 1]. Weights may be given explicitly or derived from a user ability
  profile and an operating environment.
* ``friction``: weighted sum of the cost terms (step count normalized by
  a configurable ceiling so the default coefficients keep friction in
  [0, 1]).
* ``acs``: a scalar capability score, 1 - friction * (1 - adaptability)
  * (1 - assistive compatibility); adaptability or compatibility at 1
  annihilates the friction penalty.
* ``acb_contains``: whether any system in a set clears a minimum utility
  threshold for a given profile and environment.
* ``pareto_frontier``: the non-dominated subset under the per-dimension
  optimization directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence

COST_DIMS = ("deploy_latency", "cognitive_load", "infra_dependency")
BENEFIT_DIMS = ("offline_persistence", "adaptability", "assistive_compat", "localization")
STEPS_DIM = "interaction_steps"
DIMENSIONS = (
    "deploy_latency",
    "cognitive_load",
    "infra_dependency",
    "offline_persistence",
    STEPS_DIM,
    "adaptability",
    "assistive_compat",
    "localization",
)

# Lower is better for costs and step counts; higher is better for benefits.
MINIMIZED_DIMS = COST_DIMS + (STEPS_DIM,)
MAXIMIZED_DIMS = BENEFIT_DIMS


class ScoringError(ValueError):
    """Invalid scoring configuration or input."""


@dataclass(frozen=True)
class ConstraintVector:
    """Operational constraints of one system, all costs/benefits normalized."""

    deploy_latency: float
    cognitive_load: float
    infra_dependency: float
    offline_persistence: float
    interaction_steps: int
    adaptability: float
    assistive_compat: float
    localization: float

    def __post_init__(self) -> None:
        for dim in COST_DIMS + BENEFIT_DIMS:
            value = getattr(self, dim)
            if not (0.0 <= value <= 1.0):
                raise ScoringError(f"{dim}={value} outside [0, 1]")
        if self.interaction_steps < 0:
            raise ScoringError("interaction_steps must be non-negative")

    def get(self, dim: str) -> float:
        if dim not in DIMENSIONS:
            raise ScoringError(f"unknown dimension {dim!r}")
        return getattr(self, dim)


@dataclass(frozen=True)
class AbilityProfile:
    """Functional ability levels, each in [0, 1] with 1 = full ability."""

    visual: float = 1.0
    motor: float = 1.0
    cognitive: float = 1.0
    hearing: float = 1.0

    def __post_init__(self) -> None:
        for name in ("visual", "motor", "cognitive", "hearing"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ScoringError(f"{name}={value} outside [0, 1]")


@dataclass(frozen=True)
class Environment:
    """Context of use: bandwidth, binary hardware capability, connectivity."""

    bandwidth: float = 1.0
    hardware_capable: int = 1
    connectivity: float = 1.0

    def __post_init__(self) -> None:
        if not (0.0 <= self.bandwidth <= 1.0):
            raise ScoringError(f"bandwidth={self.bandwidth} outside [0, 1]")
        if self.hardware_capable not in (0, 1):
            raise ScoringError("hardware_capable must be 0 or 1")
        if not (0.0 <= self.connectivity <= 1.0):
            raise ScoringError(f"connectivity={self.connectivity} outside [0, 1]")


@dataclass(frozen=True)
class ScoringConfig:
    """Weights, friction coefficients, and the utility threshold.

    ``weights`` maps dimension names to non-negative weights. When None,
    weights are derived: all dimensions weigh 1 except that the offline
    persistence weight is scaled by (1 - connectivity) and the cognitive
    load weight by (1 - cognitive ability), so those dimensions matter in
    proportion to how much the user context depends on them. Explicit
    weights always win over derivation.

    The five friction coefficients default to 0.2 each, which bounds
    friction by 1 once the step count is normalized by
    ``steps_normalizer``.
    """

    weights: Optional[Mapping[str, float]] = None
    theta: float = 0.5
    coeff_deploy: float = 0.2
    coeff_cognitive: float = 0.2
    coeff_steps: float = 0.2
    coeff_offline_gap: float = 0.2
    coeff_infra: float = 0.2
    steps_normalizer: float = 20.0

    def __post_init__(self) -> None:
        if not (0.0 <= self.theta <= 1.0):
            raise ScoringError(f"theta={self.theta} outside [0, 1]")
        coeffs = (
            self.coeff_deploy,
            self.coeff_cognitive,
            self.coeff_steps,
            self.coeff_offline_gap,
            self.coeff_infra,
        )
        if any(c < 0 for c in coeffs):
            raise ScoringError("friction coefficients must be non-negative")
        if sum(coeffs) <= 0:
            raise ScoringError("at least one friction coefficient must be positive")
        if self.steps_normalizer < 1:
            raise ScoringError("steps_normalizer must be at least 1")
        if self.weights is not None:
            for dim, w in self.weights.items():
                if dim not in DIMENSIONS:
                    raise ScoringError(f"unknown weight dimension {dim!r}")
                if w < 0:
                    raise ScoringError(f"weight for {dim} must be non-negative")


@dataclass(frozen=True)
class SystemDescriptor:
    name: str
    kappa: ConstraintVector
    notes: str = ""


class AcbMembership(NamedTuple):
    contained: bool
    best_system: str
    best_utility: float


def derived_weights(
    profile: Optional[AbilityProfile], env: Optional[Environment]
) -> Dict[str, float]:
    """Default per-dimension weights coupled to profile and environment."""
    weights = {dim: 1.0 for dim in DIMENSIONS}
    if env is not None:
        weights["offline_persistence"] = 1.0 - env.connectivity
    if profile is not None:
        weights["cognitive_load"] = 1.0 - profile.cognitive
    return weights


def component_utility(
    dimension: str,
    value: float,
    profile: Optional[AbilityProfile] = None,
    env: Optional[Environment] = None,
    steps_normalizer: float = 20.0,
) -> float:
    """Per-dimension utility in [0, 1].

    Cost dimensions invert (1 - value), benefit dimensions pass through,
    and step counts decay hyperbolically: 1 / (1 + steps / normalizer).
    Profile and environment are accepted for interface symmetry; in the
    default forms their influence is carried by the weights instead.
    """
    del profile, env
    if dimension in COST_DIMS:
        if not (0.0 <= value <= 1.0):
            raise ScoringError(f"{dimension}={value} outside [0, 1]")
        return 1.0 - value
    if dimension in BENEFIT_DIMS:
        if not (0.0 <= value <= 1.0):
            raise ScoringError(f"{dimension}={value} outside [0, 1]")
        return value
    if dimension == STEPS_DIM:
        if value < 0:
            raise ScoringError("interaction_steps must be non-negative")
        return 1.0 / (1.0 + value / steps_normalizer)
    raise ScoringError(f"unknown dimension {dimension!r}")


def utility(
    kappa: ConstraintVector,
    profile: Optional[AbilityProfile] = None,
    env: Optional[Environment] = None,
    cfg: Optional[ScoringConfig] = None,
) -> float:
    """Weighted mean of component utilities, normalized by the weight sum."""
    cfg = cfg or ScoringConfig()
    weights = dict(cfg.weights) if cfg.weights is not None else derived_weights(profile, env)
    for dim in DIMENSIONS:
        weights.setdefault(dim, 1.0)
    z = sum(weights[dim] for dim in DIMENSIONS)
    if z <= 0:
        raise ScoringError("weight sum must be positive")
    total = sum(
        weights[dim]
        * component_utility(dim, kappa.get(dim), profile, env, cfg.steps_normalizer)
        for dim in DIMENSIONS
    )
    return total / z


def friction(kappa: ConstraintVector, cfg: Optional[ScoringConfig] = None) -> float:
    """Total transition cost: weighted sum of the five cost terms.

    The step count is normalized by ``steps_normalizer`` and clamped to 1
    so the default coefficients keep the result inside [0, 1].
    """
    cfg = cfg or ScoringConfig()
    steps_term = min(kappa.interaction_steps / cfg.steps_normalizer, 1.0)
    return (
        cfg.coeff_deploy * kappa.deploy_latency
        + cfg.coeff_cognitive * kappa.cognitive_load
        + cfg.coeff_steps * steps_term
        + cfg.coeff_offline_gap * (1.0 - kappa.offline_persistence)
        + cfg.coeff_infra * kappa.infra_dependency
    )


def acs(kappa: ConstraintVector, cfg: Optional[ScoringConfig] = None) -> float:
    """Capability score: friction penalty discounted by adaptability and
    assistive compatibility."""
    cfg = cfg or ScoringConfig()
    return 1.0 - friction(kappa, cfg) * (1.0 - kappa.adaptability) * (
        1.0 - kappa.assistive_compat
    )


def acb_contains(
    systems: Sequence[SystemDescriptor],
    profile: Optional[AbilityProfile] = None,
    env: Optional[Environment] = None,
    cfg: Optional[ScoringConfig] = None,
) -> AcbMembership:
    """Whether some system clears the utility threshold for (profile, env).

    Returns the best system by utility; ties keep the earliest descriptor.
    """
    if not systems:
        raise ScoringError("empty system set")
    cfg = cfg or ScoringConfig()
    best_name = ""
    best_u = -1.0
    for descriptor in systems:
        u = utility(descriptor.kappa, profile, env, cfg)
        if u > best_u:
            best_u = u
            best_name = descriptor.name
    return AcbMembership(best_u >= cfg.theta, best_name, best_u)


def dominates(a: ConstraintVector, b: ConstraintVector) -> bool:
    """True iff ``a`` is at least as good as ``b`` on every dimension and
    strictly better on at least one."""
    strictly_better = False
    for dim in MINIMIZED_DIMS:
        va, vb = a.get(dim), b.get(dim)
        if va > vb:
            return False
        if va < vb:
            strictly_better = True
    for dim in MAXIMIZED_DIMS:
        va, vb = a.get(dim), b.get(dim)
        if va < vb:
            return False
        if va > vb:
            strictly_better = True
    return strictly_better


def pareto_frontier(systems: Sequence[SystemDescriptor]) -> List[SystemDescriptor]:
    """All non-dominated descriptors, in their input order."""
    return [
        s
        for s in systems
        if not any(dominates(other.kappa, s.kappa) for other in systems if other is not s)
    ]


# ---------------------------------------------------------------------------
# Systems descriptor files
# ---------------------------------------------------------------------------

class SystemsParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_systems(lines: Iterable[str]) -> List[SystemDescriptor]:
    """Parse a systems descriptor file.

    One record per line: ``<name> | <dim>=<value> ... | <notes>`` with the
    notes section optional. Names must be unique; all eight dimensions are
    required.
    """
    systems: List[SystemDescriptor] = []
    seen = set()
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        sections = [part.strip() for part in line.split("|")]
        if len(sections) < 2:
            raise SystemsParseError(line_no, "expected '<name> | <dim>=<value> ...'")
        name = sections[0]
        if not name:
            raise SystemsParseError(line_no, "empty system name")
        if name in seen:
            raise SystemsParseError(line_no, f"duplicate system name {name!r}")
        seen.add(name)
        notes = sections[2] if len(sections) > 2 else ""
        fields: Dict[str, float] = {}
        for token in sections[1].split():
            if "=" not in token:
                raise SystemsParseError(line_no, f"bad field {token!r}")
            dim, _, text = token.partition("=")
            if dim not in DIMENSIONS:
                raise SystemsParseError(line_no, f"unknown dimension {dim!r}")
            try:
                fields[dim] = float(text)
            except ValueError:
                raise SystemsParseError(line_no, f"non-numeric value {text!r}") from None
        missing = [dim for dim in DIMENSIONS if dim not in fields]
        if missing:
            raise SystemsParseError(line_no, f"missing dimensions: {', '.join(missing)}")
        try:
            kappa = ConstraintVector(
                deploy_latency=fields["deploy_latency"],
                cognitive_load=fields["cognitive_load"],
                infra_dependency=fields["infra_dependency"],
                offline_persistence=fields["offline_persistence"],
                interaction_steps=int(fields[STEPS_DIM]),
                adaptability=fields["adaptability"],
                assistive_compat=fields["assistive_compat"],
                localization=fields["localization"],
            )
        except ScoringError as exc:
            raise SystemsParseError(line_no, str(exc)) from None
        systems.append(SystemDescriptor(name=name, kappa=kappa, notes=notes))
    return systems


def read_systems(path) -> List[SystemDescriptor]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_systems(fh)


BUILTIN_SYSTEM_SETS = ("table1", "fig1")


def load_builtin_systems(name: str) -> List[SystemDescriptor]:
    """Load one of the descriptor sets shipped with the package."""
    if name not in BUILTIN_SYSTEM_SETS:
        raise ScoringError(f"unknown builtin systems set {name!r}")
    payload = resources.files("camguide").joinpath(f"data/{name}.systems").read_text("utf-8")
    return parse_systems(payload.splitlines())
