"""Report models written as JSON next to the numeric outputs."""

from typing import Optional

from pydantic import BaseModel, Field

from ...shared.types import RegimeTag
from ..thermo import (
    EfficiencyReport,
    RefrigerationDiagnostic,
    SecondLawAudit,
    SubadditivityAudit,
)


class HygieneReport(BaseModel):
    """Worst density-matrix hygiene over all record times."""
    max_trace_error: float
    max_hermiticity_error: float
    min_eigenvalue: float
    passed: bool


class ClassicalLimitReport(BaseModel):
    """Large-field closed forms evaluated at the final field energy."""
    E_f: float
    eta_W: float
    eta_F: float
    measured_eta_W: Optional[float] = None
    measured_eta_F: Optional[float] = None


class LaserComparison(BaseModel):
    """Gaussian closed forms against the simulated field at the final record."""
    alpha_sq: float
    E_pas: float
    S: float
    measured_E_pas: float
    measured_S: float


class AuditReport(BaseModel):
    """Everything checked about one run besides the efficiencies."""
    name: str
    regime: RegimeTag
    partial: bool = False
    failure: Optional[str] = Field(default=None, description="Why the integration stopped early")
    records: int
    hygiene: Optional[HygieneReport] = None
    second_law: Optional[SecondLawAudit] = None
    sigma_finite_difference_min: Optional[float] = None
    ehrenfest_max: dict[str, float] = Field(default_factory=dict, description="Over every interior record")
    ehrenfest_window_max: dict[str, float] = Field(
        default_factory=dict, description="Over the interior records of the analysis window"
    )
    first_law_max_residual: Optional[float] = None
    first_law_window_max_residual: Optional[float] = None
    subadditivity: Optional[SubadditivityAudit] = Field(
        default=None,
        description=(
            "Diagnostic only. The joint entropy may grow instantaneously faster than the field "
            "entropy, so a failing check does not fail the run"
        ),
    )
    carnot_af_margin: Optional[float] = None
    bound_terms: dict[str, Optional[float]] = Field(default_factory=dict)
    rolling_efficiencies: list[EfficiencyReport] = Field(default_factory=list)
    classical_limit: Optional[ClassicalLimitReport] = None
    laser: Optional[LaserComparison] = None
    refrigeration: Optional[RefrigerationDiagnostic] = None
    effective_temperature: Optional[float] = None
    field_temperature: Optional[float] = None
    skipped: dict[str, str] = Field(default_factory=dict, description="Analyses not run and why")

    @property
    def passed(self) -> bool:
        """Second law and hygiene hold on a complete trajectory.

        Sub-additivity and the residual maxima are reported but do not gate.
        """
        return (
            not self.partial
            and self.second_law is not None
            and self.second_law.passed
            and self.hygiene is not None
            and self.hygiene.passed
        )


class Manifest(BaseModel):
    """Content hashes of every numeric output of a run."""
    name: str
    version: str
    partial: bool
    exit_status: int
    files: dict[str, str] = Field(description="File name -> SHA-256")
