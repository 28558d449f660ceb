"""
Second-law, first-law and sub-additivity audits over recorded trajectories.
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ...config.models.engine import EngineParams
from ...shared.constants import MIN_HEAT_CURRENT
from ...shared.utils import time_derivative, window_mask
from ..dynamics import Trajectory
from .efficiency import (
    Window,
    check_steady_state,
    require_params,
    resolve_window,
    window_records,
)

logger = logging.getLogger(__name__)

SECOND_LAW_TOL = 1e-9
SUBADDITIVITY_TOL = 1e-6


def entropy_production_rate(
    traj: Trajectory, p: Optional[EngineParams] = None, finite_difference: bool = False
) -> np.ndarray:
    """sigma = dS_af/dt - J_h/T_h - J_c/T_c at every record.

    dS_af/dt is taken from the recorded instantaneous rate "dS_af" when
    present; otherwise, or with finite_difference=True, it is the centered
    difference of S_af over record times.

    Raises:
        ValueError: If fewer than 3 records exist
    """
    p = require_params(traj, p)
    if len(traj) < 3:
        raise ValueError("Entropy production needs at least 3 records")
    if traj.has("dS_af") and not finite_difference:
        dS = traj.column("dS_af")
    else:
        dS = time_derivative(traj.column("S_af"), traj.t)
    return dS - traj.column("J_h") / p.T_h - traj.column("J_c") / p.T_c


@dataclass(frozen=True)
class SecondLawAudit:
    passed: bool
    sigma_min: float
    sigma_max: float
    tolerance: float
    worst_time: float


def second_law_audit(traj: Trajectory, p: Optional[EngineParams] = None) -> SecondLawAudit:
    """Pass iff min sigma >= -1e-9 max(1, max |sigma|)."""
    sigma = entropy_production_rate(traj, p)
    scale = max(1.0, float(np.max(np.abs(sigma))))
    tolerance = SECOND_LAW_TOL * scale
    k = int(np.argmin(sigma))
    audit = SecondLawAudit(
        passed=bool(sigma[k] >= -tolerance),
        sigma_min=float(sigma[k]),
        sigma_max=float(np.max(sigma)),
        tolerance=tolerance,
        worst_time=float(traj.t[k]),
    )
    if not audit.passed:
        logger.error(f"Negative entropy production {audit.sigma_min:.3e} at t={audit.worst_time:g}")
    return audit


@dataclass(frozen=True)
class SubadditivityAudit:
    passed: bool
    margin: float
    worst_time: float


def subadditivity_audit(
    traj: Trajectory, window: Optional[Window] = None, p: Optional[EngineParams] = None
) -> SubadditivityAudit:
    """Check dS_af/dt <= dS_f/dt + 1e-6 at the interior records of a stationary window.

    Raises:
        SteadyStateError: If the window is not stationary
    """
    window = resolve_window(traj, window)
    check_steady_state(traj, window, p)
    mask = window_records(traj, window)
    t = traj.t
    slack = time_derivative(traj.column("S_f"), t) - time_derivative(traj.column("S_af"), t)
    interior = np.flatnonzero(mask)
    interior = interior[(interior > 0) & (interior < len(traj) - 1)]
    k = interior[int(np.argmin(slack[interior]))]
    audit = SubadditivityAudit(
        passed=bool(slack[k] >= -SUBADDITIVITY_TOL),
        margin=float(slack[k]),
        worst_time=float(t[k]),
    )
    if not audit.passed:
        logger.info(f"Joint entropy outgrows field entropy by {-audit.margin:.3e} at t={audit.worst_time:g}")
    return audit


def first_law_residuals(traj: Trajectory, window: Optional[Window] = None) -> np.ndarray:
    """|dE_af/dt - J_h - J_c| at the interior records (centered differences).

    With a window only the interior records inside it are returned.
    """
    t = traj.t
    E = traj.column("E_af")
    rate = (E[2:] - E[:-2]) / (t[2:] - t[:-2])
    residual = np.abs(rate - traj.column("J_h")[1:-1] - traj.column("J_c")[1:-1])
    if window is None:
        return residual
    return residual[window_mask(t[1:-1], *window)]


@dataclass(frozen=True)
class RefrigerationDiagnostic:
    """Whether the field free energy w.r.t. T_h grows while heat flows in."""
    refrigerating: bool
    max_rate: float
    duration: float


def refrigeration_diagnostic(traj: Trajectory) -> RefrigerationDiagnostic:
    """Report records where dF^h_f/dt > 0 with a positive hot current."""
    t = traj.t
    rate = time_derivative(traj.column("F_h_f"), t)
    active = (rate > 0) & (traj.column("J_h") > MIN_HEAT_CURRENT)
    spacing = float(np.mean(np.diff(t))) if len(traj) > 1 else 0.0
    return RefrigerationDiagnostic(
        refrigerating=bool(active.any()),
        max_rate=float(np.max(rate[active])) if active.any() else 0.0,
        duration=float(active.sum()) * spacing,
    )
