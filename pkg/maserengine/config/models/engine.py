"""Configuration models for the physical parameters of the maser."""

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

RESONANCE_TOL = 1e-9


class EngineParams(BaseModel):
    """Physical constants of the three-level maser plus the field truncation.

    Frequencies in units of gamma_h, temperatures in hbar*gamma_h/k_B.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    omega1: float = Field(default=0.0, description="Frequency of level |1>")
    omega2: float = Field(default=30.0, description="Frequency of level |2>")
    omega3: float = Field(default=150.0, description="Frequency of level |3>")
    omega_f: float = Field(default=30.0, description="Cavity field frequency")
    g: float = Field(default=5.0, description="Atom-field coupling")
    gamma_c: float = Field(default=1.0, description="Cold bath coupling rate")
    gamma_h: float = Field(default=1.0, description="Hot bath coupling rate")
    T_c: float = Field(default=20.0, description="Cold bath temperature")
    T_h: float = Field(default=100.0, description="Hot bath temperature")
    n_field: int = Field(default=40, description="Number of Fock levels kept")

    @field_validator("omega1", "g")
    def validate_non_negative(cls, v: float) -> float:
        """Validate omega1 and g are non-negative."""
        if v < 0:
            raise ValueError("Value must be non-negative")
        return v

    @field_validator("gamma_c", "gamma_h", "T_c", "T_h")
    def validate_positive(cls, v: float) -> float:
        """Validate rates and temperatures are positive."""
        if v <= 0:
            raise ValueError("Value must be positive")
        return v

    @field_validator("n_field")
    def validate_truncation(cls, v: int) -> int:
        """Validate the field keeps at least two Fock levels."""
        if v < 2:
            raise ValueError("Field truncation must keep at least 2 Fock levels")
        return v

    @model_validator(mode="after")
    def validate_level_scheme(self) -> "EngineParams":
        """Validate level ordering, resonance and bath temperatures."""
        if not self.omega3 > self.omega2 > self.omega1:
            raise ValueError("Levels must satisfy omega3 > omega2 > omega1")
        detuning = abs(self.omega_f - (self.omega2 - self.omega1))
        if detuning > RESONANCE_TOL * max(1.0, abs(self.omega_f)):
            raise ValueError("Field must be resonant: omega_f = omega2 - omega1")
        if not self.T_h > self.T_c:
            raise ValueError("Hot bath must be hotter than the cold bath")
        return self

    @property
    def omega_h(self) -> float:
        """Hot transition |1> <-> |3>."""
        return self.omega3 - self.omega1

    @property
    def omega_c(self) -> float:
        """Cold transition |2> <-> |3>."""
        return self.omega3 - self.omega2

    @property
    def eta_maser(self) -> float:
        """Scovil-Schulz-DuBois efficiency omega_f / omega_h."""
        return self.omega_f / self.omega_h

    @property
    def eta_carnot(self) -> float:
        return 1.0 - self.T_c / self.T_h

    @property
    def dim(self) -> int:
        """Dimension of the joint atom-field space."""
        return 3 * self.n_field
