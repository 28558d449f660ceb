"""
Free-energy landscape of a work medium as a function of its energy.

Thermal states form the lower boundary F = E - T_ref S(E); pure states
have zero entropy and lie on the line F = E.
"""
import logging
import warnings
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.optimize import brentq

from ...shared.constants import T_BRACKET_LOW
from ...shared.types import QOperator, RealVector
from ..errors import EntropyUnreachableError, TruncationWarning
from ..operators import hermitian_eig
from .quantifiers import expand_temperature_bracket, gibbs_entropy, gibbs_populations

logger = logging.getLogger(__name__)

GROUND_TOL = 1e-12


@dataclass(frozen=True)
class Landscape:
    """Thermal floor and pure ceiling on the reachable energies."""
    T_ref: float
    energies: RealVector
    thermal: RealVector
    pure: RealVector
    temperatures: RealVector
    omitted: tuple[float, ...] = ()


def _gibbs_energy(levels: RealVector, T: float) -> float:
    return float(gibbs_populations(levels, T) @ levels)


def temperature_for_energy(levels: RealVector, E: float) -> float:
    """Temperature of the Gibbs state with mean energy E.

    Returns 0 at the ground energy.

    Raises:
        EntropyUnreachableError: If E lies outside [E_ground, mean level energy)
    """
    E_ground = float(levels[0])
    if abs(E - E_ground) <= GROUND_TOL * max(1.0, abs(E_ground)):
        return 0.0
    if E < E_ground or E >= float(np.mean(levels)):
        raise EntropyUnreachableError(f"Energy {E:g} is not reached by a thermal state")
    if E <= _gibbs_energy(levels, T_BRACKET_LOW):
        return T_BRACKET_LOW
    T_high = expand_temperature_bracket(lambda T: _gibbs_energy(levels, T), E, "energy")
    return float(brentq(lambda T: _gibbs_energy(levels, T) - E, T_BRACKET_LOW, T_high, xtol=1e-13))


def free_energy_landscape(h: QOperator, T_ref: float, energy_grid: Iterable[float]) -> Landscape:
    """Thermal-floor and pure-ceiling free-energy curves over an energy grid.

    Grid points that no thermal state of the truncated h reaches are
    omitted with a TruncationWarning.
    """
    if T_ref <= 0:
        raise ValueError(f"Reference temperature must be positive, got {T_ref}")
    levels = hermitian_eig(h).eigenvalues
    kept, thermal, temps, omitted = [], [], [], []
    for E in energy_grid:
        E = float(E)
        try:
            T = temperature_for_energy(levels, E)
        except EntropyUnreachableError:
            omitted.append(E)
            continue
        S = 0.0 if T == 0.0 else gibbs_entropy(levels, T)
        kept.append(E)
        thermal.append(E - T_ref * S)
        temps.append(T)

    if omitted:
        warnings.warn(
            f"{len(omitted)} landscape energies outside the thermal range of the truncated "
            f"Hamiltonian were omitted",
            TruncationWarning,
        )
        logger.warning(f"Omitted landscape energies: {omitted}")

    energies = np.asarray(kept, dtype=float)
    return Landscape(
        T_ref=T_ref,
        energies=energies,
        thermal=np.asarray(thermal, dtype=float),
        pure=energies.copy(),
        temperatures=np.asarray(temps, dtype=float),
        omitted=tuple(omitted),
    )
