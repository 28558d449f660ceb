"""
Named run configurations reproducing the reference operating points.

Every dynamics preset shares the level scheme omega2 = omega_f = 30,
g = 5, gamma_c = gamma_h = 1, T_c = 20, T_h = 100 and starts from the
atomic ground state with the cavity in vacuum. Only the hot level
omega3, the run length and the field truncation differ.
"""
from ...config.models import (
    EngineParams,
    InitialStateConfig,
    LandscapeConfig,
    RunConfig,
)
from ...shared.constants import UNITS_TAG
from ...shared.types import OutputKind

PRESET_RECORD_EVERY = 0.25

_BASE_PARAMS = dict(
    omega1=0.0,
    omega2=30.0,
    omega_f=30.0,
    g=5.0,
    gamma_c=1.0,
    gamma_h=1.0,
    T_c=20.0,
    T_h=100.0,
)


def _dynamics(name: str, omega3: float, n_field: int, t_final: float, dt: float) -> RunConfig:
    return RunConfig(
        name=name,
        units=UNITS_TAG,
        params=EngineParams(omega3=omega3, n_field=n_field, **_BASE_PARAMS),
        initial_state=InitialStateConfig(kind="ground_vacuum"),
        t_final=t_final,
        dt=dt,
        record_every=PRESET_RECORD_EVERY,
    )


def _landscape() -> RunConfig:
    # Work medium in units of omega_f with the hot bath at 10 omega_f
    return RunConfig(
        name="landscape",
        units=UNITS_TAG,
        kind="landscape",
        params=EngineParams(
            omega1=0.0, omega2=1.0, omega3=5.0, omega_f=1.0,
            g=0.1, gamma_c=1.0, gamma_h=1.0, T_c=1.0, T_h=10.0, n_field=60,
        ),
        outputs=[OutputKind.LANDSCAPE_CSV],
        landscape=LandscapeConfig(T_ref=10.0, n_field=60, e_max=20.0, grid_points=201),
    )


def presets() -> list[RunConfig]:
    """Below threshold, at threshold, above threshold, the long above-threshold run and the landscape export."""
    return [
        _dynamics("below", omega3=34.0, n_field=110, t_final=100.0, dt=5e-3),
        _dynamics("at_threshold", omega3=37.5, n_field=150, t_final=100.0, dt=5e-3),
        _dynamics("above", omega3=150.0, n_field=80, t_final=100.0, dt=5e-3),
        _dynamics("above_long", omega3=150.0, n_field=110, t_final=400.0, dt=5e-3),
        _landscape(),
    ]


def preset_names() -> list[str]:
    return [config.name for config in presets()]


def get_preset(name: str) -> RunConfig:
    """Look up a preset by name.

    Raises:
        KeyError: If no preset has this name
    """
    for config in presets():
        if config.name == name:
            return config
    raise KeyError(f"Unknown preset '{name}' (available: {', '.join(preset_names())})")
