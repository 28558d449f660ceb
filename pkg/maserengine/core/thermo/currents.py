"""
Heat currents and joint energy of the maser.
"""
from functools import lru_cache

import numpy as np

from ...config.models.engine import EngineParams
from ...shared.types import Bath, QOperator
from ...shared.constants import ENTROPY_CUTOFF
from ..maser import bath_occupation, build_hamiltonian, liouvillian, master_rhs
from ..operators import as_operator, hermitian_eig
from ..work import entropy_from_eigenvalues


@lru_cache(maxsize=8)
def _hamiltonian(p: EngineParams) -> QOperator:
    return build_hamiltonian(p)


def _trace_product(a: QOperator, b: QOperator) -> float:
    return float(np.real(np.einsum("ij,ji->", a, b)))


def heat_current(rho: QOperator, p: EngineParams, bath: Bath) -> float:
    """J = Tr[H L_bath rho] with the full lab-frame Hamiltonian.

    Positive values are energy flowing from the bath into the maser. The
    value is the same for a rotating-frame state at resonance.
    """
    return _trace_product(_hamiltonian(p), liouvillian(bath, rho, p))


def population_heat_current(P1: float, P3: float, p: EngineParams) -> float:
    """Hot-bath current from the atomic populations.

    J_h = omega_h (2 gamma_h n_h P1 - 2 gamma_h (n_h + 1) P3)
    """
    n_h = bath_occupation(Bath.HOT, p)
    return p.omega_h * (2.0 * p.gamma_h * n_h * P1 - 2.0 * p.gamma_h * (n_h + 1.0) * P3)


def energy_af(rho: QOperator, p: EngineParams) -> float:
    """Joint atom-field energy Tr[rho H]."""
    return _trace_product(as_operator(rho), _hamiltonian(p))


def entropy_and_rate(rho: QOperator, p: EngineParams) -> tuple[float, float]:
    """Von Neumann entropy of the joint state and its rate -Tr[rho_dot ln rho].

    Eigenvalues below 1e-14 are clipped before taking the logarithm.
    """
    spectrum = hermitian_eig(0.5 * (rho + rho.conj().T))
    v = spectrum.eigenvectors
    log_l = np.log(np.clip(spectrum.eigenvalues, ENTROPY_CUTOFF, None))
    rho_dot = master_rhs(rho, p)
    diag = np.real(np.sum(v.conj() * (rho_dot @ v), axis=0))
    return entropy_from_eigenvalues(spectrum.eigenvalues), float(-diag @ log_l)
