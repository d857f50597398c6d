"""Webcam alignment guidance engine with a closed-loop simulator and an
accessibility capability scoring library."""

from .geometry import (
    AlignmentState,
    Distance,
    FaceLandmarks,
    Horizontal,
    InvalidLandmarksError,
    Lighting,
    Point2,
    Presence,
    SpatialThresholds,
    Tilt,
    Vertical,
    analyze,
    distance_status,
    horizontal_status,
    tilt_status,
    vertical_status,
)
from .luminance import (
    InvalidFrameError,
    LightingThresholds,
    LumaFrame,
    lighting_status,
    mean_luma,
    should_sample,
)
from .engine import (
    CatalogError,
    EngineConfig,
    EngineState,
    GuidanceEvent,
    MessageCatalog,
    Observation,
    Severity,
    TimestampRegressionError,
    default_catalog,
    resolve_message,
    select_correction,
    step,
)
from .metrics import (
    AbilityProfile,
    ConstraintVector,
    Environment,
    ScoringConfig,
    ScoringError,
    SystemDescriptor,
    acb_contains,
    acs,
    component_utility,
    friction,
    load_builtin_systems,
    pareto_frontier,
    read_systems,
    utility,
)
from .simulator import SessionTrace, SimConfig, UserModel, project, replay, run

__version__ = "0.1.0"

__all__ = [
    "AlignmentState",
    "Distance",
    "FaceLandmarks",
    "Horizontal",
    "InvalidLandmarksError",
    "Lighting",
    "Point2",
    "Presence",
    "SpatialThresholds",
    "Tilt",
    "Vertical",
    "analyze",
    "distance_status",
    "horizontal_status",
    "tilt_status",
    "vertical_status",
    "InvalidFrameError",
    "LightingThresholds",
    "LumaFrame",
    "lighting_status",
    "mean_luma",
    "should_sample",
    "CatalogError",
    "EngineConfig",
    "EngineState",
    "GuidanceEvent",
    "MessageCatalog",
    "Observation",
    "Severity",
    "TimestampRegressionError",
    "default_catalog",
    "resolve_message",
    "select_correction",
    "step",
    "AbilityProfile",
    "ConstraintVector",
    "Environment",
    "ScoringConfig",
    "ScoringError",
    "SystemDescriptor",
    "acb_contains",
    "acs",
    "component_utility",
    "friction",
    "load_builtin_systems",
    "pareto_frontier",
    "read_systems",
    "utility",
    "SessionTrace",
    "SimConfig",
    "UserModel",
    "project",
    "replay",
    "run",
]
