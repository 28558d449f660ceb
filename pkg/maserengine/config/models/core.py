"""Core configuration models."""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ...shared.constants import (
    DEFAULT_DT,
    DEFAULT_RECORD_EVERY,
    DEFAULT_TAIL_TOLERANCE,
    DEFAULT_WINDOW_START_FRACTION,
    QGRID_PADDING,
    QGRID_RESOLUTION,
    QGRID_SCALE,
    UNITS_TAG,
)
from ...shared.types import Frame, OutputKind
from ..validation import check_timing
from .engine import EngineParams

DYNAMICS_OUTPUTS = [
    OutputKind.LEDGER_CSV,
    OutputKind.QGRID,
    OutputKind.EFFICIENCY_JSON,
    OutputKind.AUDIT_JSON,
    OutputKind.PNUM_CSV,
]


class InitialStateConfig(BaseModel):
    """Initial joint state of atom and field."""
    model_config = ConfigDict(extra="forbid")

    kind: Literal["ground_vacuum", "gibbs", "gibbs_poisson", "custom"] = Field(
        default="ground_vacuum",
        description="ground_vacuum, Gibbs atom and field, Gibbs atom with Poisson field, or a .npy file",
    )
    temperature: Optional[float] = Field(
        default=None, description="Temperature of the Gibbs factors"
    )
    mean_photons: Optional[float] = Field(
        default=None, description="Mean of the Poissonian field"
    )
    path: Optional[str] = Field(default=None, description="Density matrix file for kind=custom")

    @field_validator("temperature")
    def validate_temperature(cls, v: Optional[float]) -> Optional[float]:
        """Validate the temperature is positive."""
        if v is not None and v <= 0:
            raise ValueError("Temperature must be positive")
        return v

    @field_validator("mean_photons")
    def validate_mean_photons(cls, v: Optional[float]) -> Optional[float]:
        """Validate the mean photon number is non-negative."""
        if v is not None and v < 0:
            raise ValueError("Mean photon number must be non-negative")
        return v

    @model_validator(mode="after")
    def validate_required_fields(self) -> "InitialStateConfig":
        """Validate the fields each kind needs are present."""
        if self.kind in ("gibbs", "gibbs_poisson") and self.temperature is None:
            raise ValueError(f"Initial state '{self.kind}' requires a temperature")
        if self.kind == "gibbs_poisson" and self.mean_photons is None:
            raise ValueError("Initial state 'gibbs_poisson' requires mean_photons")
        if self.kind == "custom" and not self.path:
            raise ValueError("Initial state 'custom' requires a path")
        return self


class WindowConfig(BaseModel):
    """Steady-state analysis window."""
    model_config = ConfigDict(extra="forbid")

    start_fraction: float = Field(
        default=DEFAULT_WINDOW_START_FRACTION,
        description="Window starts at this fraction of the run",
    )
    t_start: Optional[float] = None
    t_end: Optional[float] = None

    @field_validator("start_fraction")
    def validate_start_fraction(cls, v: float) -> float:
        """Validate the fraction lies in [0, 1)."""
        if not 0.0 <= v < 1.0:
            raise ValueError("start_fraction must lie in [0, 1)")
        return v

    @model_validator(mode="after")
    def validate_bounds(self) -> "WindowConfig":
        """Validate explicit bounds come as an ordered pair."""
        if (self.t_start is None) != (self.t_end is None):
            raise ValueError("t_start and t_end must be given together")
        if self.t_start is not None and not self.t_start < self.t_end:
            raise ValueError("t_start must precede t_end")
        return self

    def resolve(self, t_final: float) -> tuple[float, float]:
        if self.t_start is not None:
            return self.t_start, self.t_end
        return self.start_fraction * t_final, t_final


class QGridConfig(BaseModel):
    """Q-function grid settings."""
    model_config = ConfigDict(extra="forbid")

    resolution: int = Field(default=QGRID_RESOLUTION, ge=3)
    scale: float = Field(default=QGRID_SCALE, gt=0)
    padding: float = Field(default=QGRID_PADDING, ge=0)


class LandscapeConfig(BaseModel):
    """Free-energy landscape of a harmonic work medium, in units of omega_f."""
    model_config = ConfigDict(extra="forbid")

    T_ref: float = Field(default=10.0, gt=0, description="Reference bath temperature")
    n_field: int = Field(default=60, ge=2, description="Fock levels of the medium")
    e_max: float = Field(default=20.0, gt=0, description="Largest energy on the grid")
    grid_points: int = Field(default=201, ge=2)


class LoggingConfig(BaseModel):
    """Logging configuration."""
    model_config = ConfigDict(extra="forbid")

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"
    file: Optional[str] = Field(default=None, description="Log file inside the run directory")
    max_size: int = Field(default=10, ge=1)  # MB
    backup_count: int = Field(default=5, ge=0)


class RunConfig(BaseModel):
    """Everything needed to reproduce one run."""
    model_config = ConfigDict(extra="forbid")

    name: str
    units: Literal["hbar_kB_gammah_1"] = Field(
        description=f"Unit convention tag, must be '{UNITS_TAG}'"
    )
    kind: Literal["dynamics", "landscape"] = "dynamics"
    params: EngineParams = Field(default_factory=EngineParams)
    initial_state: InitialStateConfig = Field(default_factory=InitialStateConfig)
    t_final: float = Field(default=100.0, gt=0)
    dt: float = Field(default=DEFAULT_DT, gt=0)
    record_every: float = Field(default=DEFAULT_RECORD_EVERY, gt=0)
    frame: Frame = Frame.ROTATING
    outputs: list[OutputKind] = Field(default_factory=lambda: list(DYNAMICS_OUTPUTS))
    window: WindowConfig = Field(default_factory=WindowConfig)
    tail_tolerance: Optional[float] = Field(default=DEFAULT_TAIL_TOLERANCE)
    snapshot_times: list[float] = Field(default_factory=list)
    qgrid: QGridConfig = Field(default_factory=QGridConfig)
    landscape: Optional[LandscapeConfig] = None
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    @field_validator("name")
    def validate_name(cls, v: str) -> str:
        """Validate the name can serve as a directory name."""
        if not v.strip() or "/" in v or "\\" in v:
            raise ValueError("Run name must be a non-empty path component")
        return v

    @field_validator("tail_tolerance")
    def validate_tail_tolerance(cls, v: Optional[float]) -> Optional[float]:
        """Validate the truncation threshold is positive."""
        if v is not None and v <= 0:
            raise ValueError("tail_tolerance must be positive")
        return v

    @model_validator(mode="after")
    def validate_run(self) -> "RunConfig":
        """Validate timing for dynamics runs and the landscape section."""
        if self.kind == "landscape":
            if self.landscape is None:
                raise ValueError("kind 'landscape' requires a landscape section")
            return self
        check_timing(self.t_final, self.dt, self.record_every)
        if OutputKind.LANDSCAPE_CSV in self.outputs:
            raise ValueError("landscape_csv is only produced by kind 'landscape'")
        for t in self.snapshot_times:
            if not 0 <= t <= self.t_final:
                raise ValueError(f"Snapshot time {t} lies outside [0, t_final]")
        return self
