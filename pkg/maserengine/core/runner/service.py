"""
Execution of one run configuration: integration, analyses and outputs.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from ...config.models import RunConfig
from ...logging.formatters import MaserFormatter
from ...logging.handlers import FileHandler
from ...shared.constants import (
    ATOM_DIM,
    DENSITY_TRACE_TOL,
    GAUSSIAN_VALID_ALPHA_SQ,
    NEGATIVITY_TOL,
)
from ...shared.types import OutputKind, RegimeTag, Subsystem
from ..dynamics import Trajectory, ehrenfest_residuals, fock_populations, integrate
from ..errors import (
    ConfigError,
    DimensionError,
    IntegrationError,
    NotAnEngineError,
    SteadyStateError,
    UnphysicalStateError,
)
from ..maser import classify_regime, effective_temperature
from ..operators import number_operator, partial_trace
from ..optics import (
    classical_limit_efficiencies,
    default_grid_spec,
    gaussian_laser_analytics,
    q_function,
)
from ..thermo import (
    EfficiencyReport,
    carnot_af_check,
    efficiency_report,
    entropy_production_rate,
    first_law_residuals,
    refrigeration_diagnostic,
    rolling_efficiencies,
    second_law_audit,
    subadditivity_audit,
)
from ..work import free_energy_landscape
from . import outputs
from .observers import standard_observers
from .reports import (
    AuditReport,
    ClassicalLimitReport,
    HygieneReport,
    LaserComparison,
)
from .states import build_initial_state

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_AUDIT = 2

# Called with (run name, current record time, final time)
RunProgress = Callable[[str, float, float], None]


@dataclass
class RunResult:
    """Outcome of one run."""
    name: str
    run_dir: Path
    exit_code: int
    partial: bool = False
    files: list[Path] = field(default_factory=list)
    efficiency: Optional[EfficiencyReport] = None
    audit: Optional[AuditReport] = None
    trajectory: Optional[Trajectory] = None


class RunService:
    """Runs one configuration and writes its outputs below a base directory."""

    def __init__(self, config: RunConfig, out_dir: Path, base_dir: Optional[Path] = None):
        """Initialize the run.

        Args:
            config: Validated run configuration
            out_dir: Directory the run directory is created in
            base_dir: Directory relative input paths resolve against
        """
        self.config = config
        self.run_dir = Path(out_dir) / config.name
        self.base_dir = base_dir
        self.files: list[Path] = []

    def execute(self, progress: Optional[RunProgress] = None) -> RunResult:
        """Execute the run.

        Raises:
            ConfigError: If the initial state or output directory is unusable
        """
        try:
            self.run_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ConfigError(f"Cannot create {self.run_dir}: {e}", criterion="output") from e

        handler = self._attach_log_file()
        try:
            self.files.append(outputs.write_run_config(self.config, self.run_dir))
            if self.config.kind == "landscape":
                result = self._landscape()
            else:
                result = self._dynamics(progress)
            outputs.write_manifest(
                self.run_dir, self.config.name, self.files, result.partial, result.exit_code
            )
            logger.info(f"Run '{self.config.name}' finished with exit status {result.exit_code}")
            return result
        finally:
            if handler is not None:
                logging.getLogger("maserengine").removeHandler(handler)
                handler.close()

    def _attach_log_file(self) -> Optional[logging.Handler]:
        settings = self.config.logging
        if not settings.file:
            return None
        handler = FileHandler(
            self.run_dir / settings.file,
            max_bytes=settings.max_size * 1024 * 1024,
            backup_count=settings.backup_count,
        )
        handler.setFormatter(MaserFormatter())
        handler.setLevel(settings.level)
        logging.getLogger("maserengine").addHandler(handler)
        return handler

    def _wants(self, kind: OutputKind) -> bool:
        return kind in self.config.outputs

    def _landscape(self) -> RunResult:
        settings = self.config.landscape
        h = self.config.params.omega_f * number_operator(settings.n_field)
        grid = np.linspace(0.0, settings.e_max, settings.grid_points)
        landscape = free_energy_landscape(h, settings.T_ref, grid)
        if self._wants(OutputKind.LANDSCAPE_CSV):
            self.files.append(outputs.write_landscape(landscape, self.run_dir / outputs.LANDSCAPE_FILE))
        return RunResult(self.config.name, self.run_dir, EXIT_OK, files=self.files)

    def _dynamics(self, progress: Optional[RunProgress]) -> RunResult:
        config = self.config
        p = config.params
        try:
            rho0 = build_initial_state(config.initial_state, p, self.base_dir)
        except (DimensionError, UnphysicalStateError) as e:
            raise ConfigError(str(e), criterion="initial_state") from e

        failure = None
        callback = None
        if progress is not None:
            def callback(t: float, t_final: float) -> None:
                progress(config.name, t, t_final)
        try:
            traj = integrate(
                rho0,
                p,
                config.t_final,
                config.dt,
                config.record_every,
                standard_observers(p, config.tail_tolerance),
                frame=config.frame,
                tail_tolerance=config.tail_tolerance,
                snapshot_times=config.snapshot_times,
                progress=callback,
            )
        except IntegrationError as e:
            logger.error(f"Run '{config.name}' stopped early ({e.criterion}): {e}")
            traj = e.trajectory if e.trajectory is not None else Trajectory(params=p, frame=config.frame)
            failure = f"{e.criterion}: {e}"

        partial = failure is not None
        if len(traj) >= 3:
            traj.add_column("sigma", entropy_production_rate(traj, p))

        report, audit = self._analyse(traj, partial, failure)
        self._write_dynamics_outputs(traj, report, audit)
        exit_code = EXIT_OK if audit.passed else EXIT_AUDIT
        return RunResult(
            config.name,
            self.run_dir,
            exit_code,
            partial=partial,
            files=self.files,
            efficiency=report,
            audit=audit,
            trajectory=traj,
        )

    def _analyse(
        self, traj: Trajectory, partial: bool, failure: Optional[str]
    ) -> tuple[Optional[EfficiencyReport], AuditReport]:
        p = self.config.params
        regime = classify_regime(p)
        audit = AuditReport(
            name=self.config.name, regime=regime, partial=partial, failure=failure, records=len(traj)
        )
        if len(traj) < 3:
            audit.skipped["all"] = f"only {len(traj)} records"
            return None, audit

        min_eig = float(np.nanmin(traj.audit_column("min_eigenvalue")))
        max_trace = float(np.nanmax(traj.audit_column("trace_error")))
        audit.hygiene = HygieneReport(
            max_trace_error=max_trace,
            max_hermiticity_error=float(np.nanmax(traj.audit_column("hermiticity_error"))),
            min_eigenvalue=min_eig,
            passed=max_trace < DENSITY_TRACE_TOL and min_eig >= -NEGATIVITY_TOL,
        )
        audit.second_law = second_law_audit(traj, p)
        audit.sigma_finite_difference_min = float(
            np.min(entropy_production_rate(traj, p, finite_difference=True))
        )
        residuals = ehrenfest_residuals(traj, p)
        audit.ehrenfest_max = residuals.max()
        audit.first_law_max_residual = float(np.max(first_law_residuals(traj)))
        audit.refrigeration = refrigeration_diagnostic(traj)

        window = self.config.window.resolve(self.config.t_final)
        try:
            audit.ehrenfest_window_max = residuals.within(*window).max()
        except ValueError as e:
            audit.skipped["ehrenfest_window"] = str(e)
        window_first_law = first_law_residuals(traj, window)
        if window_first_law.size:
            audit.first_law_window_max_residual = float(np.max(window_first_law))

        report = None
        try:
            report = efficiency_report(traj, window, p)
            audit.bound_terms = {
                "dF_c_passive_dt": report.fdot_c_passive,
                "dF_c_thermal_dt": report.fdot_c_thermal,
            }
        except (SteadyStateError, NotAnEngineError) as e:
            audit.skipped["efficiency"] = str(e)
            logger.warning(f"Efficiencies skipped: {e}")

        if report is not None:
            try:
                audit.rolling_efficiencies = rolling_efficiencies(traj, window, p)
            except (SteadyStateError, NotAnEngineError) as e:
                audit.skipped["rolling_efficiencies"] = str(e)

        try:
            audit.subadditivity = subadditivity_audit(traj, window, p)
        except SteadyStateError as e:
            audit.skipped["subadditivity"] = str(e)

        try:
            audit.carnot_af_margin = carnot_af_check(traj, window, p)
        except (SteadyStateError, NotAnEngineError) as e:
            audit.skipped["carnot_af"] = str(e)

        self._regime_comparisons(traj, regime, report, audit)
        return report, audit

    def _regime_comparisons(
        self,
        traj: Trajectory,
        regime: RegimeTag,
        report: Optional[EfficiencyReport],
        audit: AuditReport,
    ) -> None:
        p = self.config.params
        if regime is RegimeTag.BELOW:
            audit.effective_temperature = effective_temperature(p)
            audit.field_temperature = float(traj.column("T_match_f")[-1])
            return
        if regime is not RegimeTag.ABOVE:
            return

        E_f = float(traj.column("E_f")[-1])
        try:
            eta_W, eta_F = classical_limit_efficiencies(E_f, p.omega_f, p.T_h, p.eta_maser)
            audit.classical_limit = ClassicalLimitReport(
                E_f=E_f,
                eta_W=eta_W,
                eta_F=eta_F,
                measured_eta_W=report.eta_W if report is not None else None,
                measured_eta_F=report.eta_F if report is not None else None,
            )
        except ValueError as e:
            audit.skipped["classical_limit"] = str(e)

        alpha_sq = float(traj.column("n_mean")[-1])
        if alpha_sq < GAUSSIAN_VALID_ALPHA_SQ:
            audit.skipped["laser"] = (
                f"mean photon number {alpha_sq:.3g} below {GAUSSIAN_VALID_ALPHA_SQ:g}"
            )
            return
        analytics = gaussian_laser_analytics(alpha_sq, p.omega_f, p.T_h)
        audit.laser = LaserComparison(
            alpha_sq=alpha_sq,
            E_pas=analytics.E_pas,
            S=analytics.S,
            measured_E_pas=float(traj.column("Epas_f")[-1]),
            measured_S=float(traj.column("S_f")[-1]),
        )

    def _write_dynamics_outputs(
        self, traj: Trajectory, report: Optional[EfficiencyReport], audit: AuditReport
    ) -> None:
        run_dir = self.run_dir
        p = self.config.params
        if self._wants(OutputKind.LEDGER_CSV) and len(traj):
            self.files.append(outputs.write_ledger(traj, run_dir / outputs.LEDGER_FILE))

        rho = traj.final_state
        if rho is not None and self._wants(OutputKind.PNUM_CSV):
            self.files.append(
                outputs.write_pnum(fock_populations(rho, p), run_dir / outputs.PNUM_FILE)
            )
        if rho is not None and self._wants(OutputKind.QGRID):
            rho_f = partial_trace(rho, Subsystem.FIELD, (ATOM_DIM, p.n_field))
            mean = float(np.real(np.diagonal(rho_f)) @ np.arange(p.n_field))
            settings = self.config.qgrid
            spec = default_grid_spec(mean, settings.resolution, settings.scale, settings.padding)
            grid = q_function(rho_f, spec)
            path = run_dir / outputs.QGRID_FILE
            grid.to_csv(path)
            self.files.append(path)

        if report is not None and self._wants(OutputKind.EFFICIENCY_JSON):
            self.files.append(outputs.write_json(report, run_dir / outputs.EFFICIENCY_FILE))
        if self._wants(OutputKind.AUDIT_JSON):
            self.files.append(outputs.write_json(audit, run_dir / outputs.AUDIT_FILE))


def run(
    config: RunConfig,
    out_dir: Path,
    progress: Optional[RunProgress] = None,
    base_dir: Optional[Path] = None,
) -> RunResult:
    """Execute a configuration and write its run directory below out_dir."""
    return RunService(config, out_dir, base_dir).execute(progress)
