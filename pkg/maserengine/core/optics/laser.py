"""
Closed forms for the laser state in the Gaussian approximation of its
Poissonian photon statistics.
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy.stats import norm

from ...shared.constants import GAUSSIAN_VALID_ALPHA_SQ
from ...shared.types import RealVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaserAnalytics:
    alpha_sq: float
    omega_f: float
    T: float
    E: float
    E_pas: float
    S: float
    F: float

    @property
    def W(self) -> float:
        """Ergotropy E - E_pas."""
        return self.E - self.E_pas


def gaussian_laser_analytics(alpha_sq: float, omega_f: float, T: float) -> LaserAnalytics:
    """Energy, passive energy, entropy and free energy of a phase-averaged laser.

    E     = omega_f alpha^2
    E_pas = omega_f (2 sqrt(2/pi) alpha - 1/2)
    S     = 1/2 + ln sqrt(2 pi) + ln alpha
    F     = E - T S

    Raises:
        ValueError: If alpha_sq < 1
    """
    if alpha_sq < 1.0:
        raise ValueError(f"Gaussian approximation needs alpha^2 >= 1, got {alpha_sq}")
    if alpha_sq < GAUSSIAN_VALID_ALPHA_SQ:
        logger.warning(
            f"Gaussian approximation is inaccurate for alpha^2={alpha_sq:g} "
            f"(reliable above {GAUSSIAN_VALID_ALPHA_SQ:g})"
        )
    alpha = np.sqrt(alpha_sq)
    E = omega_f * alpha_sq
    S = 0.5 + np.log(np.sqrt(2.0 * np.pi)) + np.log(alpha)
    return LaserAnalytics(
        alpha_sq=alpha_sq,
        omega_f=omega_f,
        T=T,
        E=float(E),
        E_pas=float(omega_f * (2.0 * np.sqrt(2.0 / np.pi) * alpha - 0.5)),
        S=float(S),
        F=float(E - T * S),
    )


def classical_limit_efficiencies(
    E_f: float, omega_f: float, T_h: float, eta_maser: float
) -> tuple[float, float]:
    """Ergotropic and free-energy efficiencies of a large laser field.

    eta_W ~ eta_maser (1 - sqrt(2 omega_f / (pi E_f)))
    eta_F ~ eta_maser (1 - T_h / (2 E_f))

    Raises:
        ValueError: If E_f <= 0
    """
    if E_f <= 0:
        raise ValueError(f"Field energy must be positive, got {E_f}")
    if E_f <= omega_f:
        logger.warning(f"Field energy {E_f:g} is below one quantum; closed forms are unreliable")
    eta_W = eta_maser * (1.0 - np.sqrt(2.0 * omega_f / (np.pi * E_f)))
    eta_F = eta_maser * (1.0 - T_h / (2.0 * E_f))
    return float(eta_W), float(eta_F)


def gaussian_photon_distribution(n: RealVector, alpha_sq: float) -> RealVector:
    """Normal density with mean and variance alpha^2, evaluated at n."""
    n = np.asarray(n, dtype=float)
    return norm.pdf(n, loc=alpha_sq, scale=np.sqrt(alpha_sq))
