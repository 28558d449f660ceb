"""
Fixed-step RK4 integration of the maser master equation.

The state is advanced with classical fourth-order Runge-Kutta on
master_rhs. At every record time the state is audited, symmetrised and
renormalised, the observers are evaluated and the truncation monitor
inspects the top Fock levels of the field.
"""
import logging
from typing import Callable, Iterable, Optional, Sequence

from ...config.models.engine import EngineParams
from ...config.validation import check_timing
from ...shared.constants import DEFAULT_TAIL_TOLERANCE, TAIL_LEVELS
from ...shared.types import Frame, Observer, QOperator
from ..errors import DimensionError, IntegrationError, TruncationError
from ..maser import master_rhs
from ..operators import check_density, density_audit, sanitize_density
from .observers import fock_tail
from .trajectory import Trajectory

logger = logging.getLogger(__name__)

# Called with (current record time, final time)
ProgressCallback = Callable[[float, float], None]


def rk4_step(rho: QOperator, p: EngineParams, dt: float, frame: Frame) -> QOperator:
    """Advance rho by one classical Runge-Kutta step."""
    k1 = master_rhs(rho, p, frame)
    k2 = master_rhs(rho + 0.5 * dt * k1, p, frame)
    k3 = master_rhs(rho + 0.5 * dt * k2, p, frame)
    k4 = master_rhs(rho + dt * k3, p, frame)
    return rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _snapshot_indices(
    snapshot_times: Iterable[float], record_every: float, n_records: int
) -> dict[int, float]:
    indices: dict[int, float] = {}
    for t in snapshot_times:
        k = int(round(t / record_every))
        if abs(k * record_every - t) > 1e-9 * max(1.0, abs(t)) or not 0 <= k <= n_records:
            raise ValueError(f"Snapshot time {t} is not a record time")
        indices[k] = k * record_every
    return indices


def _observe(rho: QOperator, observers: Sequence[Observer]) -> dict[str, float]:
    values: dict[str, float] = {}
    for observer in observers:
        values.update(observer(rho))
    return values


def integrate(
    rho0: QOperator,
    p: EngineParams,
    t_final: float,
    dt: float,
    record_every: float,
    observers: Sequence[Observer] = (),
    *,
    frame: Frame = Frame.ROTATING,
    tail_tolerance: Optional[float] = DEFAULT_TAIL_TOLERANCE,
    snapshot_times: Iterable[float] = (),
    progress: Optional[ProgressCallback] = None,
) -> Trajectory:
    """Integrate the master equation from rho0 and record a trajectory.

    Args:
        rho0: Initial joint density matrix on dimension 3 * n_field
        p: Engine parameters
        t_final: Final time
        dt: RK4 step
        record_every: Record cadence, an integer multiple of dt
        observers: Pure state -> {name: value} functions evaluated at every record
        frame: Rotating (default) or lab frame
        tail_tolerance: Truncation monitor threshold on the top Fock
            populations; None disables the monitor
        snapshot_times: Record times at which the full state is stored
        progress: Optional callback invoked after every record

    Returns:
        Trajectory with the final state attached

    Raises:
        ConfigError: If the timing is inconsistent
        UnphysicalStateError: If rho0 is not a density matrix
        IntegrationError: If a hygiene check fails; carries the partial trajectory
        TruncationError: If the field population reaches the truncation edge
    """
    steps_per_record, n_records = check_timing(t_final, dt, record_every)
    rho = check_density(rho0).copy()
    if rho.shape[0] != p.dim:
        raise DimensionError(f"Initial state of dimension {rho.shape[0]} does not match {p.dim}")
    snapshots = _snapshot_indices(snapshot_times, record_every, n_records)

    traj = Trajectory(params=p, frame=frame)
    logger.info(
        f"Integrating to t={t_final:g} with dt={dt:g} "
        f"({n_records} records, dim={p.dim}, frame={frame.value})"
    )

    def record(k: int, state: QOperator, audit) -> None:
        t = k * record_every
        traj.append(t, _observe(state, observers), audit)
        if k in snapshots:
            traj.snapshots[snapshots[k]] = state.copy()
        logger.debug(
            f"trace_err={audit.trace_error:.2e} herm_err={audit.hermiticity_error:.2e} "
            f"min_eig={audit.min_eigenvalue:.2e}",
            extra={"sim_time": t},
        )
        if tail_tolerance is not None:
            tail = fock_tail(state, p, min(TAIL_LEVELS, p.n_field))
            if tail > tail_tolerance:
                traj.final_state = state.copy()
                raise TruncationError(
                    f"Fock population {tail:.3e} in the top {TAIL_LEVELS} levels at t={t:g} "
                    f"exceeds {tail_tolerance:g}; enlarge n_field",
                    criterion="truncation",
                    trajectory=traj,
                )
        if progress is not None:
            progress(t, t_final)

    record(0, rho, density_audit(rho))
    for k in range(1, n_records + 1):
        for _ in range(steps_per_record):
            rho = rk4_step(rho, p, dt, frame)
        audit = density_audit(rho)
        try:
            rho = sanitize_density(rho)
        except IntegrationError as exc:
            logger.error(f"Integration aborted at t={k * record_every:g}: {exc}")
            traj.final_state = rho
            exc.trajectory = traj
            raise
        record(k, rho, audit)

    traj.final_state = rho
    logger.info(f"Integration finished at t={traj.times[-1]:g}")
    return traj
