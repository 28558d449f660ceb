"""
Steady-state efficiencies of the maser engine.

Every efficiency is the windowed least-squares rate of a ledger quantity of
the reduced field state divided by the windowed mean hot-bath current.
"""
import logging
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field

from ...config.models.engine import EngineParams
from ...shared.constants import (
    DEFAULT_WINDOW_START_FRACTION,
    MIN_HEAT_CURRENT,
    STEADY_STATE_RATE_TOL,
)
from ...shared.types import RegimeTag
from ...shared.utils import time_derivative, windowed_rate
from ..dynamics import Trajectory
from ..errors import NotAnEngineError, SteadyStateError
from ..maser import classify_regime

logger = logging.getLogger(__name__)

Window = tuple[float, float]


class EfficiencyReport(BaseModel):
    """Efficiencies of one steady-state window and their reference values."""
    window: Window = Field(description="Analysis window (t_start, t_end)")
    J_h: float = Field(description="Mean hot-bath heat current")
    J_c: float = Field(description="Mean cold-bath heat current")
    eta_E: float = Field(description="Energetic efficiency")
    eta_W: float = Field(description="Ergotropic efficiency")
    eta_Wtot: float = Field(description="Total-ergotropy efficiency")
    eta_F: float = Field(description="Free-energy efficiency w.r.t. T_h")
    eta_maser: float
    eta_carnot: float
    sigma_min: Optional[float] = Field(default=None, description="Minimum entropy production")
    fdot_c_passive: Optional[float] = Field(
        default=None, description="Rate of the cold free energy of the passive field state"
    )
    fdot_c_thermal: Optional[float] = Field(
        default=None, description="Rate of the cold free energy of the entropy-matched field state"
    )
    regime: RegimeTag


def resolve_window(
    traj: Trajectory,
    window: Optional[Window] = None,
    start_fraction: float = DEFAULT_WINDOW_START_FRACTION,
) -> Window:
    """Explicit window, or the last (1 - start_fraction) of the run."""
    if window is not None:
        return float(window[0]), float(window[1])
    t = traj.t
    return float(t[0] + start_fraction * (t[-1] - t[0])), float(t[-1])


def require_params(traj: Trajectory, p: Optional[EngineParams]) -> EngineParams:
    p = p or traj.params
    if p is None:
        raise ValueError("Engine parameters are required")
    return p


def window_records(traj: Trajectory, window: Window, min_records: int = 3) -> np.ndarray:
    mask = traj.mask(*window)
    if int(mask.sum()) < min_records:
        raise SteadyStateError(
            f"Window {window} holds {int(mask.sum())} records, at least {min_records} required",
            criterion="records",
        )
    return mask


def check_steady_state(traj: Trajectory, window: Window, p: Optional[EngineParams] = None) -> float:
    """Validate max |dP_i/dt| < 1e-4 gamma_h over the window.

    Returns:
        The largest population rate in the window

    Raises:
        SteadyStateError: With criterion "populations" or "records"
    """
    p = require_params(traj, p)
    mask = window_records(traj, window)
    t = traj.t
    rate = max(
        float(np.max(np.abs(time_derivative(traj.column(name), t)[mask])))
        for name in ("P1", "P2", "P3")
    )
    limit = STEADY_STATE_RATE_TOL * p.gamma_h
    if rate >= limit:
        raise SteadyStateError(
            f"Window {window} is not stationary: max |dP/dt| = {rate:.3e} >= {limit:g}",
            criterion="populations",
        )
    return rate


def _mean_hot_current(traj: Trajectory, mask: np.ndarray) -> float:
    J_h = float(np.mean(traj.column("J_h")[mask]))
    if J_h <= 0 or abs(J_h) < MIN_HEAT_CURRENT:
        raise NotAnEngineError(
            f"Mean hot-bath current {J_h:.3e} is not positive; not operating as an engine",
            criterion="heat_current",
        )
    return J_h


def _rate(traj: Trajectory, name: str, mask: np.ndarray) -> float:
    return windowed_rate(traj.column(name)[mask], traj.t[mask])


def _optional_rate(traj: Trajectory, name: str, mask: np.ndarray) -> Optional[float]:
    return _rate(traj, name, mask) if traj.has(name) else None


def efficiency_report(
    traj: Trajectory,
    window: Optional[Window] = None,
    p: Optional[EngineParams] = None,
) -> EfficiencyReport:
    """Energetic, ergotropic, total-ergotropy and free-energy efficiencies.

    Raises:
        SteadyStateError: If the window is not stationary
        NotAnEngineError: If the mean hot-bath current is not positive
    """
    p = require_params(traj, p)
    window = resolve_window(traj, window)
    check_steady_state(traj, window, p)
    mask = window_records(traj, window)
    J_h = _mean_hot_current(traj, mask)
    t = traj.t[mask]

    W_tot = traj.column("W_f") + traj.column("Wbound_f")
    sigma_min = float(np.min(traj.column("sigma")[mask])) if traj.has("sigma") else None
    report = EfficiencyReport(
        window=window,
        J_h=J_h,
        J_c=float(np.mean(traj.column("J_c")[mask])),
        eta_E=_rate(traj, "E_f", mask) / J_h,
        eta_W=_rate(traj, "W_f", mask) / J_h,
        eta_Wtot=windowed_rate(W_tot[mask], t) / J_h,
        eta_F=_rate(traj, "F_h_f", mask) / J_h,
        eta_maser=p.eta_maser,
        eta_carnot=p.eta_carnot,
        sigma_min=sigma_min,
        fdot_c_passive=_optional_rate(traj, "F_c_f_passive", mask),
        fdot_c_thermal=_optional_rate(traj, "F_c_f_thermal", mask),
        regime=classify_regime(p),
    )
    logger.info(
        f"Window [{window[0]:g}, {window[1]:g}]: eta_E={report.eta_E:.5f} "
        f"eta_W={report.eta_W:.5f} eta_Wtot={report.eta_Wtot:.5f} eta_F={report.eta_F:.5f}"
    )
    logger.info(
        f"Bound terms: dF_c(pi)/dt={report.fdot_c_passive} "
        f"dF_c(th)/dt={report.fdot_c_thermal}"
    )
    return report


def rolling_efficiencies(
    traj: Trajectory,
    window: Optional[Window] = None,
    p: Optional[EngineParams] = None,
    segments: int = 4,
) -> list[EfficiencyReport]:
    """Efficiency reports over consecutive equal sub-windows of a window."""
    if segments < 1:
        raise ValueError("At least one segment is required")
    t_start, t_end = resolve_window(traj, window)
    edges = np.linspace(t_start, t_end, segments + 1)
    return [
        efficiency_report(traj, (float(a), float(b)), p)
        for a, b in zip(edges[:-1], edges[1:])
    ]


def instantaneous_ratios(traj: Trajectory) -> dict[str, np.ndarray]:
    """Time-resolved dE_f/dt, dW_f/dt and dF_h_f/dt over J_h.

    Records with |J_h| < 1e-8 give NaN. These ratios are diagnostics of
    transients, not efficiencies.
    """
    t = traj.t
    J_h = traj.column("J_h")
    valid = np.abs(J_h) >= MIN_HEAT_CURRENT
    safe = np.where(valid, J_h, 1.0)
    ratios = {}
    for key, name in (("E", "E_f"), ("W", "W_f"), ("F", "F_h_f")):
        rate = time_derivative(traj.column(name), t)
        ratios[key] = np.where(valid, rate / safe, np.nan)
    return ratios


def carnot_af_check(
    traj: Trajectory,
    window: Optional[Window] = None,
    p: Optional[EngineParams] = None,
) -> float:
    """Margin eta_carnot - (dF^c_af/dt) / J_h for the joint atom-field state.

    The free-energy rate is the mean rate (F(t_end) - F(t_start)) / duration
    and J_h its trapezoidal time average, so the margin is non-negative for
    any window, transient or stationary.

    Raises:
        NotAnEngineError: If the mean hot-bath current is not positive
    """
    p = require_params(traj, p)
    window = resolve_window(traj, window)
    mask = window_records(traj, window, min_records=2)
    t = traj.t[mask]
    duration = t[-1] - t[0]
    J_h = float(np.trapezoid(traj.column("J_h")[mask], t)) / duration
    if J_h <= 0 or abs(J_h) < MIN_HEAT_CURRENT:
        raise NotAnEngineError(
            f"Mean hot-bath current {J_h:.3e} over {window} is not positive",
            criterion="heat_current",
        )
    F = traj.column("F_c_af")[mask]
    ratio = (F[-1] - F[0]) / duration / J_h
    return p.eta_carnot - float(ratio)
