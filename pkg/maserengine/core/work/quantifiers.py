"""
Energy and free-energy decomposition of quantum states.

A state rho with Hamiltonian h splits its energy as

    E = W + E_pas = W + W_bound + E_th

where W is the ergotropy, E_pas the energy of the passive state pi and
E_th the energy of the Gibbs state with the same entropy as pi. The
non-equilibrium free energy F(T) = E - T S decomposes accordingly into
W + W_bound + F_th(T).
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

import numpy as np
from scipy.optimize import brentq
from scipy.special import logsumexp

from ...shared.constants import (
    ENTROPY_CUTOFF,
    ENTROPY_MATCH_TOL,
    NEGATIVITY_TOL,
    T_BRACKET_HIGH_START,
    T_BRACKET_LOW,
    T_BRACKET_MAX_DOUBLINGS,
    TAIL_LEVELS,
)
from ...shared.types import QOperator, RealVector
from ..errors import DimensionError, EntropyUnreachableError, UnphysicalStateError
from ..operators import as_operator, density_eigenvalues, hermitian_eig, identity, kron

logger = logging.getLogger(__name__)

MAX_NON_EXTENSIVITY_DIM = 8


def entropy_from_eigenvalues(eigenvalues: RealVector) -> float:
    """-sum(l ln l) with eigenvalues below 1e-14 contributing zero.

    Raises:
        UnphysicalStateError: If an eigenvalue is below -1e-8
    """
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    if eigenvalues.size and eigenvalues.min() < -NEGATIVITY_TOL:
        raise UnphysicalStateError(f"Negative eigenvalue {eigenvalues.min():.3e}")
    kept = eigenvalues[eigenvalues > ENTROPY_CUTOFF]
    return float(max(-np.sum(kept * np.log(kept)), 0.0))


def von_neumann_entropy(rho: QOperator) -> float:
    """Von Neumann entropy S = -Tr[rho ln rho]."""
    return entropy_from_eigenvalues(density_eigenvalues(rho))


def _check_pair(rho: QOperator, h: QOperator) -> tuple[QOperator, QOperator]:
    rho = as_operator(rho)
    h = as_operator(h)
    if rho.shape != h.shape:
        raise DimensionError(f"State {rho.shape} and Hamiltonian {h.shape} differ in dimension")
    return rho, h


def _descending(values: RealVector) -> RealVector:
    # Ties keep their input order
    return values[np.argsort(-values, kind="stable")]


def _passive_populations(rho: QOperator) -> RealVector:
    return _descending(density_eigenvalues(rho))


def passive_state(rho: QOperator, h: QOperator) -> QOperator:
    """Minimum-energy state unitarily reachable from rho.

    The eigenvalues of rho, sorted descending, are placed on the energy
    eigenstates of h sorted ascending.

    Raises:
        DimensionError: If rho and h differ in dimension
    """
    rho, h = _check_pair(rho, h)
    spectrum = hermitian_eig(h)
    v = spectrum.eigenvectors
    return (v * _passive_populations(rho)) @ v.conj().T


def mean_energy(rho: QOperator, h: QOperator) -> float:
    return float(np.real(np.trace(as_operator(rho) @ as_operator(h))))


def ergotropy(rho: QOperator, h: QOperator) -> float:
    """Maximum energy extractable from rho by a cyclic unitary."""
    rho, h = _check_pair(rho, h)
    energies = hermitian_eig(h).eigenvalues
    return mean_energy(rho, h) - float(_passive_populations(rho) @ energies)


def gibbs_populations(energies: RealVector, T: float) -> RealVector:
    """Boltzmann weights exp(-e/T)/Z, computed in log space."""
    if T <= 0:
        raise ValueError(f"Temperature must be positive, got {T}")
    log_w = -np.asarray(energies, dtype=float) / T
    return np.exp(log_w - logsumexp(log_w))


def gibbs_entropy(energies: RealVector, T: float) -> float:
    log_w = -np.asarray(energies, dtype=float) / T
    log_p = log_w - logsumexp(log_w)
    return float(max(-np.sum(np.exp(log_p) * log_p), 0.0))


def gibbs_state(h: QOperator, T: float) -> QOperator:
    """Thermal state exp(-h/T)/Z of h via its spectral decomposition.

    Raises:
        ValueError: If T <= 0
    """
    if T <= 0:
        raise ValueError(f"Temperature must be positive, got {T}")
    spectrum = hermitian_eig(h)
    v = spectrum.eigenvectors
    return (v * gibbs_populations(spectrum.eigenvalues, T)) @ v.conj().T


def expand_temperature_bracket(fn, target: float, what: str) -> float:
    """Double an upper temperature from 1 until fn(T) exceeds target."""
    T_high = T_BRACKET_HIGH_START
    for _ in range(T_BRACKET_MAX_DOUBLINGS):
        if fn(T_high) > target:
            return T_high
        T_high *= 2.0
    raise EntropyUnreachableError(f"No temperature reaches {what} {target:g}")


def _match_entropy(energies: RealVector, s_target: float) -> float:
    dim = energies.size
    if s_target < 0:
        raise EntropyUnreachableError(f"Entropy target {s_target} is negative")
    if s_target >= np.log(dim) - ENTROPY_MATCH_TOL:
        raise EntropyUnreachableError(
            f"Entropy {s_target:.12g} unreachable on truncated space of dimension {dim} "
            f"(ln dim = {np.log(dim):.12g})"
        )

    def entropy_at(T: float) -> float:
        return gibbs_entropy(energies, T)

    if s_target <= entropy_at(T_BRACKET_LOW):
        return T_BRACKET_LOW
    T_high = expand_temperature_bracket(entropy_at, s_target, "entropy")
    return float(
        brentq(
            lambda T: entropy_at(T) - s_target,
            T_BRACKET_LOW,
            T_high,
            xtol=1e-13,
            rtol=4 * np.finfo(float).eps,
            maxiter=500,
        )
    )


def _guard_tail(populations: RealVector, tail_guard: Optional[float]) -> None:
    if tail_guard is None:
        return
    tail = float(np.max(populations[-TAIL_LEVELS:]))
    if tail > tail_guard:
        raise EntropyUnreachableError(
            f"Entropy-matched Gibbs state populates the top levels ({tail:.3e} > {tail_guard:g})",
            criterion="truncation",
        )


def match_entropy_temperature(
    h: QOperator, s_target: float, tail_guard: Optional[float] = None
) -> tuple[float, QOperator]:
    """Temperature and Gibbs state of h whose entropy equals s_target.

    Args:
        h: Hermitian Hamiltonian
        s_target: Entropy in [0, ln dim)
        tail_guard: If given, the matched state's top energy levels must
            stay below this population

    Raises:
        EntropyUnreachableError: If s_target < 0, s_target >= ln(dim) - 1e-9
            or the matched state violates the tail guard
    """
    spectrum = hermitian_eig(h)
    T = _match_entropy(spectrum.eigenvalues, s_target)
    populations = gibbs_populations(spectrum.eigenvalues, T)
    _guard_tail(populations, tail_guard)
    v = spectrum.eigenvectors
    return T, (v * populations) @ v.conj().T


@dataclass(frozen=True)
class WorkLedger:
    """Energetic decomposition of a state at one instant."""
    E: float
    W: float
    W_bound: float
    E_th: float
    E_pas: float
    S: float
    T_match: float
    F: Mapping[float, float] = field(default_factory=dict)

    @property
    def W_tot(self) -> float:
        """Total ergotropy W + W_bound."""
        return self.W + self.W_bound

    def free_energy(self, T: float) -> float:
        """Non-equilibrium free energy E - T S."""
        return self.E - T * self.S

    def passive_free_energy(self, T: float) -> float:
        """Free energy of the passive state, which shares the entropy of rho."""
        return self.E_pas - T * self.S

    def thermal_free_energy(self, T: float) -> float:
        """Free energy of the entropy-matched Gibbs state."""
        return self.E_th - T * self.S


def ledger_from_spectra(
    rho_eigenvalues: RealVector,
    energy: float,
    energies: RealVector,
    temps: Iterable[float] = (),
    tail_guard: Optional[float] = None,
) -> WorkLedger:
    """Build a ledger from the spectrum of rho, its mean energy and the ascending levels of h."""
    energies = np.asarray(energies, dtype=float)
    if np.size(rho_eigenvalues) != energies.size:
        raise DimensionError(
            f"{np.size(rho_eigenvalues)} state eigenvalues for {energies.size} energy levels"
        )
    S = entropy_from_eigenvalues(rho_eigenvalues)
    E_pas = float(_descending(np.asarray(rho_eigenvalues, dtype=float)) @ energies)
    T_match = _match_entropy(energies, S)
    populations = gibbs_populations(energies, T_match)
    _guard_tail(populations, tail_guard)
    E_th = float(populations @ energies)
    return WorkLedger(
        E=energy,
        W=energy - E_pas,
        W_bound=E_pas - E_th,
        E_th=E_th,
        E_pas=E_pas,
        S=S,
        T_match=T_match,
        F={float(T): energy - T * S for T in temps},
    )


def ledger(
    rho: QOperator,
    h: QOperator,
    temps: Iterable[float] = (),
    tail_guard: Optional[float] = None,
) -> WorkLedger:
    """Full decomposition of rho with respect to h.

    Args:
        rho: Density matrix
        h: Hermitian Hamiltonian of the same dimension
        temps: Reference temperatures for the free energy
        tail_guard: Optional population bound on the top levels of the
            entropy-matched Gibbs state

    Raises:
        DimensionError: If rho and h differ in dimension
        EntropyUnreachableError: If the entropy of rho cannot be matched
    """
    rho, h = _check_pair(rho, h)
    return ledger_from_spectra(
        density_eigenvalues(rho), mean_energy(rho, h), hermitian_eig(h).eigenvalues, temps, tail_guard
    )


def free_energy_decomposition(rho: QOperator, h: QOperator, T: float) -> tuple[float, float, float]:
    """Split F^T(rho) into (W, W_bound, F^T of the entropy-matched Gibbs state)."""
    book = ledger(rho, h, (T,))
    return book.W, book.W_bound, book.thermal_free_energy(T)


def non_extensivity_check(rho: QOperator, h: QOperator) -> tuple[float, float]:
    """Ergotropy of one copy and per-copy ergotropy of two copies.

    Raises:
        DimensionError: If rho is larger than 8 x 8 or mismatched with h
    """
    rho, h = _check_pair(rho, h)
    dim = rho.shape[0]
    if dim > MAX_NON_EXTENSIVITY_DIM:
        raise DimensionError(
            f"Two-copy check is limited to dimension {MAX_NON_EXTENSIVITY_DIM}, got {dim}"
        )
    one = identity(dim)
    h_two = kron(h, one) + kron(one, h)
    return ergotropy(rho, h), 0.5 * ergotropy(kron(rho, rho), h_two)
