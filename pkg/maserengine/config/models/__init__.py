"""Configuration models package."""

__all__ = [
    # Physical parameters
    "EngineParams",
    # Run models
    "InitialStateConfig",
    "WindowConfig",
    "QGridConfig",
    "LandscapeConfig",
    "LoggingConfig",
    "RunConfig",
    "DYNAMICS_OUTPUTS",
]

from .engine import EngineParams

from .core import (
    DYNAMICS_OUTPUTS,
    InitialStateConfig,
    LandscapeConfig,
    LoggingConfig,
    QGridConfig,
    RunConfig,
    WindowConfig,
)
