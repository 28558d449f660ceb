"""
Observers recorded by every dynamics run.

Besides the atomic populations and the photon number, each record carries
the work ledger of the reduced field state, the entropy and energy of the
joint state and both heat currents.
"""
import math
import warnings
from typing import Optional

import numpy as np

from ...config.models.engine import EngineParams
from ...shared.constants import ATOM_DIM, TAIL_LEVELS
from ...shared.types import Bath, Observer, QOperator, Subsystem
from ..dynamics import atom_field_observer
from ..errors import EntropyUnreachableError, TruncationWarning
from ..operators import density_eigenvalues, partial_trace
from ..optics import photon_stats
from ..thermo import energy_af, entropy_and_rate, heat_current
from ..work import WorkLedger, ledger_from_spectra

# The extended ladder stops growing at this multiple of n_field
MAX_LADDER_FACTOR = 16


def field_ledger(
    rho_f: QOperator,
    omega_f: float,
    T_h: float,
    T_c: float,
    tail_guard: Optional[float] = None,
) -> WorkLedger:
    """Work ledger of the field state w.r.t. omega_f a^dagger a.

    The eigenvalues of rho_f are zero-padded onto a longer harmonic ladder
    until the entropy-matched Gibbs state keeps its top levels below
    tail_guard. Padding with empty levels leaves E, S, W and E_pas
    unchanged.
    """
    eigenvalues = density_eigenvalues(rho_f)
    n_field = eigenvalues.size
    energy = float(np.real(np.diagonal(rho_f)) @ (omega_f * np.arange(n_field)))
    temps = (T_h, T_c)

    size = n_field
    while size <= MAX_LADDER_FACTOR * n_field:
        padded = np.concatenate([eigenvalues, np.zeros(size - n_field)])
        try:
            return ledger_from_spectra(
                padded, energy, omega_f * np.arange(size, dtype=float), temps, tail_guard
            )
        except EntropyUnreachableError as exc:
            if exc.criterion != "truncation":
                raise
            size *= 2

    warnings.warn(
        f"Entropy-matched field state still populates level {size // 2 - 1}; "
        f"the thermal energy is a lower estimate",
        TruncationWarning,
    )
    padded = np.concatenate([eigenvalues, np.zeros(size // 2 - n_field)])
    return ledger_from_spectra(
        padded, energy, omega_f * np.arange(size // 2, dtype=float), temps
    )


def field_observer(p: EngineParams, tail_guard: Optional[float] = None) -> Observer:
    """g2, Fock tail and the work ledger of the reduced field."""
    def observe(rho: QOperator) -> dict[str, float]:
        rho_f = partial_trace(rho, Subsystem.FIELD, (ATOM_DIM, p.n_field))
        stats = photon_stats(rho_f)
        book = field_ledger(rho_f, p.omega_f, p.T_h, p.T_c, tail_guard)
        return {
            "g2": math.nan if stats.g2 is None else stats.g2,
            "tail": float(np.max(stats.distribution[-TAIL_LEVELS:])),
            "E_f": book.E,
            "W_f": book.W,
            "Wbound_f": book.W_bound,
            "Eth_f": book.E_th,
            "Epas_f": book.E_pas,
            "S_f": book.S,
            "T_match_f": book.T_match,
            "F_h_f": book.F[float(p.T_h)],
            "F_c_f": book.F[float(p.T_c)],
            "F_c_f_passive": book.passive_free_energy(p.T_c),
            "F_c_f_thermal": book.thermal_free_energy(p.T_c),
        }
    return observe


def joint_observer(p: EngineParams) -> Observer:
    """Entropy, its instantaneous rate, energy and cold free energy of the joint state, plus heat currents."""
    def observe(rho: QOperator) -> dict[str, float]:
        S, dS = entropy_and_rate(rho, p)
        E = energy_af(rho, p)
        return {
            "S_af": S,
            "dS_af": dS,
            "E_af": E,
            "F_c_af": E - p.T_c * S,
            "J_h": heat_current(rho, p, Bath.HOT),
            "J_c": heat_current(rho, p, Bath.COLD),
        }
    return observe


def standard_observers(p: EngineParams, tail_guard: Optional[float] = None) -> list[Observer]:
    return [atom_field_observer(p), field_observer(p, tail_guard), joint_observer(p)]

