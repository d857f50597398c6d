"""JSON configuration for thresholds, debounces, scoring, and simulation.

Everything runs on defaults when no file is given. The config path can
also come from the ``CAMGUIDE_CONFIG`` environment variable; an explicit
path wins over the variable.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Optional

from .engine import EngineConfig
from .geometry import SpatialThresholds
from .luminance import LightingThresholds
from .metrics import ScoringConfig
from .simulator import SimConfig

CONFIG_ENV_VAR = "CAMGUIDE_CONFIG"

_SECTIONS = ("spatial", "lighting", "engine", "scoring", "sim")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class AppConfig:
    engine: EngineConfig = field(default_factory=EngineConfig)
    scoring: ScoringConfig = field(default_factory=ScoringConfig)
    sim: SimConfig = field(default_factory=SimConfig)


def _build(cls, section: dict, name: str):
    try:
        return cls(**section)
    except TypeError as exc:
        raise ConfigError(f"section {name!r}: {exc}") from None
    except ValueError as exc:
        raise ConfigError(f"section {name!r}: {exc}") from None


def load_config(path: Optional[str] = None) -> AppConfig:
    """Load configuration from ``path``, the env var, or pure defaults."""
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR) or None
    if path is None:
        return AppConfig()
    with open(path, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from None
    if not isinstance(payload, dict):
        raise ConfigError(f"{path}: top level must be an object")
    unknown = set(payload) - set(_SECTIONS)
    if unknown:
        raise ConfigError(f"{path}: unknown sections {sorted(unknown)}")

    spatial = _build(SpatialThresholds, payload.get("spatial", {}), "spatial")
    lighting = _build(LightingThresholds, payload.get("lighting", {}), "lighting")
    engine_kwargs = dict(payload.get("engine", {}))
    engine = _build(
        EngineConfig,
        {"spatial": spatial, "lighting": lighting, **engine_kwargs},
        "engine",
    )
    scoring = _build(ScoringConfig, payload.get("scoring", {}), "scoring")
    sim = _build(SimConfig, payload.get("sim", {}), "sim")
    return AppConfig(engine=engine, scoring=scoring, sim=sim)
