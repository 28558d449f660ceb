"""Initial joint states of atom and cavity."""
import logging
from pathlib import Path
from typing import Optional

import numpy as np

from ...config.models import EngineParams, InitialStateConfig
from ...shared.types import QOperator
from ..errors import ConfigError, DimensionError
from ..operators import check_density, kron
from ..optics import poisson_state
from ..work import gibbs_populations

logger = logging.getLogger(__name__)


def _atom_gibbs(p: EngineParams, T: float) -> QOperator:
    levels = np.array([p.omega1, p.omega2, p.omega3])
    return np.diag(gibbs_populations(levels, T)).astype(np.complex128)


def _field_gibbs(p: EngineParams, T: float) -> QOperator:
    levels = p.omega_f * np.arange(p.n_field, dtype=float)
    return np.diag(gibbs_populations(levels, T)).astype(np.complex128)


def ground_vacuum(p: EngineParams) -> QOperator:
    """|1>|0> with all population in the atomic ground state and no photons."""
    rho = np.zeros((p.dim, p.dim), dtype=np.complex128)
    rho[0, 0] = 1.0
    return rho


def build_initial_state(
    spec: InitialStateConfig, p: EngineParams, base_dir: Optional[Path] = None
) -> QOperator:
    """Joint density matrix described by an initial-state section.

    Args:
        spec: Initial-state configuration
        p: Engine parameters (fixes the dimension)
        base_dir: Directory relative paths of custom states resolve against

    Raises:
        ConfigError: If a custom state cannot be read
        DimensionError: If a custom state has the wrong dimension
        UnphysicalStateError: If a custom state is not a density matrix
    """
    if spec.kind == "ground_vacuum":
        return ground_vacuum(p)
    if spec.kind == "gibbs":
        return kron(_atom_gibbs(p, spec.temperature), _field_gibbs(p, spec.temperature))
    if spec.kind == "gibbs_poisson":
        return kron(_atom_gibbs(p, spec.temperature), poisson_state(spec.mean_photons, p.n_field))

    path = Path(spec.path)
    if not path.is_absolute() and base_dir is not None:
        path = base_dir / path
    try:
        rho = np.load(path)
    except (OSError, ValueError) as e:
        raise ConfigError(f"Cannot read initial state {path}: {e}", criterion="initial_state") from e
    if rho.shape != (p.dim, p.dim):
        raise DimensionError(f"Initial state {path} has shape {rho.shape}, expected {(p.dim, p.dim)}")
    logger.info(f"Loaded initial state from {path}")
    return check_density(rho)
