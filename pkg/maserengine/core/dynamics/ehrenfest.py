"""
Ehrenfest equations of the maser and their residuals on a recorded trajectory.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ...config.models.engine import EngineParams
from ...shared.types import Bath, RealVector
from ...shared.utils import window_mask
from ..maser import bath_occupation
from .trajectory import Trajectory

REQUIRED_OBSERVABLES = ("n_mean", "P2", "P3", "im_sp_a")


def ehrenfest_rhs(
    P2: RealVector,
    P3: RealVector,
    im_sp_a: RealVector,
    p: EngineParams,
) -> tuple[RealVector, RealVector, RealVector]:
    """Analytic time derivatives of <a^+ a>, P2 and P3.

    d<n>/dt  = -2g Im<sigma_+ a>
    dP2/dt   =  2g Im<sigma_+ a> + 2 gc (nc + 1) P3 - 2 gc nc P2
    dP3/dt   = -2 [gh (nh + 1) + gc (nc + 1) + gh nh] P3
               - 2 (gh nh - gc nc) P2 + 2 gh nh
    """
    P2 = np.asarray(P2, dtype=float)
    P3 = np.asarray(P3, dtype=float)
    im_sp_a = np.asarray(im_sp_a, dtype=float)
    n_h = bath_occupation(Bath.HOT, p)
    n_c = bath_occupation(Bath.COLD, p)
    gh, gc = p.gamma_h, p.gamma_c

    dn = -2.0 * p.g * im_sp_a
    dP2 = -dn + 2.0 * gc * (n_c + 1.0) * P3 - 2.0 * gc * n_c * P2
    dP3 = (
        -2.0 * (gh * (n_h + 1.0) + gc * (n_c + 1.0) + gh * n_h) * P3
        - 2.0 * (gh * n_h - gc * n_c) * P2
        + 2.0 * gh * n_h
    )
    return dn, dP2, dP3


@dataclass(frozen=True)
class EhrenfestResiduals:
    """Absolute residuals at the interior record times."""
    times: RealVector
    photon: RealVector
    p2: RealVector
    p3: RealVector
    photon_rate: RealVector

    def max(self) -> dict[str, float]:
        return {
            "photon": float(np.max(self.photon)),
            "P2": float(np.max(self.p2)),
            "P3": float(np.max(self.p3)),
        }

    def within(self, start: float, stop: float) -> "EhrenfestResiduals":
        """Residuals at the interior record times inside [start, stop].

        Raises:
            ValueError: If no interior record falls inside the interval
        """
        keep = window_mask(self.times, start, stop)
        if not keep.any():
            raise ValueError(f"No interior record in [{start:g}, {stop:g}]")
        return EhrenfestResiduals(
            times=self.times[keep],
            photon=self.photon[keep],
            p2=self.p2[keep],
            p3=self.p3[keep],
            photon_rate=self.photon_rate[keep],
        )

    def photon_tolerance(self, gamma_h: float, rel: float = 1e-3) -> float:
        """rel * max(|d<n>/dt|, gamma_h) over the covered records."""
        return rel * max(float(np.max(self.photon_rate)), gamma_h)


def _centered(values: np.ndarray, times: np.ndarray) -> np.ndarray:
    return (values[2:] - values[:-2]) / (times[2:] - times[:-2])


def ehrenfest_residuals(traj: Trajectory, p: Optional[EngineParams] = None) -> EhrenfestResiduals:
    """Compare centered differences of the recorded observables with ehrenfest_rhs.

    Raises:
        ValueError: If fewer than 3 records exist or parameters are unknown
        KeyError: If a required observable was not recorded
    """
    if len(traj) < 3:
        raise ValueError("Ehrenfest residuals need at least 3 records")
    p = p or traj.params
    if p is None:
        raise ValueError("Engine parameters are required for the Ehrenfest equations")
    missing = [name for name in REQUIRED_OBSERVABLES if not traj.has(name)]
    if missing:
        raise KeyError(f"Trajectory lacks observables {missing}")

    t = traj.t
    n, P2, P3, im = (traj.column(name) for name in REQUIRED_OBSERVABLES)
    dn, dP2, dP3 = ehrenfest_rhs(P2[1:-1], P3[1:-1], im[1:-1], p)
    fd_n = _centered(n, t)
    return EhrenfestResiduals(
        times=t[1:-1],
        photon=np.abs(fd_n - dn),
        p2=np.abs(_centered(P2, t) - dP2),
        p3=np.abs(_centered(P3, t) - dP3),
        photon_rate=np.abs(fd_n),
    )
