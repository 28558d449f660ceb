"""
Three-level maser model: Hamiltonian, local Liouvillians and master equation.

Atom levels |1>, |2>, |3> are stored at indices 0, 1, 2 of the atomic
factor; the joint space is atom (x) field with the field index fastest.
Dissipators follow the convention D[A] rho = 2 A rho A^+ - A^+A rho - rho A^+A.
"""
import logging
from functools import lru_cache

import numpy as np

from ...config.models.engine import EngineParams
from ...shared.constants import ATOM_DIM
from ...shared.types import Bath, Frame, QOperator, RegimeTag
from ..errors import DimensionError, RegimeError
from ..operators import as_operator, destroy, identity, kron, number_operator, transition

logger = logging.getLogger(__name__)

REGIME_REL_TOL = 1e-12

# (lower, upper) atomic indices of the bath transitions
_BATH_TRANSITIONS = {
    Bath.HOT: (0, 2),
    Bath.COLD: (1, 2),
}


def thermal_occupation(omega: float, T: float) -> float:
    """Bose-Einstein occupation 1 / (exp(omega/T) - 1).

    Raises:
        ValueError: If omega <= 0 (Bose divergence) or T <= 0
    """
    if omega <= 0:
        raise ValueError(f"Bath frequency must be positive, got {omega}")
    if T <= 0:
        raise ValueError(f"Temperature must be positive, got {T}")
    x = omega / T
    if x > 700.0:
        return 0.0
    return float(1.0 / np.expm1(x))


def bath_occupation(bath: Bath, p: EngineParams) -> float:
    """Thermal occupation of the hot or cold bath at its transition frequency."""
    if bath is Bath.HOT:
        return thermal_occupation(p.omega_h, p.T_h)
    return thermal_occupation(p.omega_c, p.T_c)


def jump_rates(bath: Bath, p: EngineParams) -> list[tuple[float, tuple[int, int]]]:
    """Rates and atomic transitions (to, from) of a bath Liouvillian.

    L_bath = gamma (n + 1) D[|lower><upper|] + gamma n D[|upper><lower|]
    """
    lower, upper = _BATH_TRANSITIONS[bath]
    gamma = p.gamma_h if bath is Bath.HOT else p.gamma_c
    n = bath_occupation(bath, p)
    return [
        (gamma * (n + 1.0), (lower, upper)),
        (gamma * n, (upper, lower)),
    ]


def jump_operators(bath: Bath, p: EngineParams) -> list[tuple[float, QOperator]]:
    """Dense jump operators |i><j| (x) 1_field with their rates."""
    field_identity = identity(p.n_field)
    return [
        (rate, kron(transition(i, j, ATOM_DIM), field_identity))
        for rate, (i, j) in jump_rates(bath, p)
    ]


def build_free_hamiltonian(p: EngineParams) -> QOperator:
    """H_free = sum_i omega_i |i><i| (x) 1 + omega_f 1 (x) a^+ a."""
    atom = np.diag([p.omega1, p.omega2, p.omega3]).astype(np.complex128)
    return kron(atom, identity(p.n_field)) + p.omega_f * kron(
        identity(ATOM_DIM), number_operator(p.n_field)
    )


def build_interaction_hamiltonian(p: EngineParams) -> QOperator:
    """H_JC = g (sigma_- (x) a^+ + sigma_+ (x) a) on the |1> <-> |2> transition."""
    a = destroy(p.n_field)
    sigma_minus = transition(0, 1, ATOM_DIM)
    sigma_plus = transition(1, 0, ATOM_DIM)
    return p.g * (kron(sigma_minus, a.conj().T) + kron(sigma_plus, a))


def build_hamiltonian(p: EngineParams) -> QOperator:
    """Full lab-frame Hamiltonian H = H_free + H_JC."""
    return build_free_hamiltonian(p) + build_interaction_hamiltonian(p)


@lru_cache(maxsize=32)
def free_energies(p: EngineParams) -> np.ndarray:
    """Diagonal of H_free in the product basis."""
    atom = np.array([p.omega1, p.omega2, p.omega3])
    field = p.omega_f * np.arange(p.n_field, dtype=float)
    return (atom[:, None] + field[None, :]).reshape(-1)


@lru_cache(maxsize=32)
def _free_phase_matrix(p: EngineParams) -> np.ndarray:
    energies = free_energies(p)
    return -1j * (energies[:, None] - energies[None, :])


def dissipator_apply(A: QOperator, rho: QOperator) -> QOperator:
    """D[A] rho = 2 A rho A^+ - A^+ A rho - rho A^+ A."""
    A = as_operator(A)
    rho = as_operator(rho)
    if A.shape != rho.shape:
        raise DimensionError(f"Jump operator {A.shape} and state {rho.shape} differ")
    A_dag = A.conj().T
    AdA = A_dag @ A
    return 2.0 * A @ rho @ A_dag - AdA @ rho - rho @ AdA


def _blocks(rho: QOperator, p: EngineParams) -> np.ndarray:
    rho = as_operator(rho)
    if rho.shape[0] != p.dim:
        raise DimensionError(
            f"State of dimension {rho.shape[0]} does not match 3 x {p.n_field}"
        )
    return rho.reshape(ATOM_DIM, p.n_field, ATOM_DIM, p.n_field)


def _add_dissipator(out: np.ndarray, r: np.ndarray, rate: float, to: int, frm: int) -> None:
    """Accumulate rate * D[|to><frm| (x) 1] rho on the block view."""
    if rate == 0.0:
        return
    out[to, :, to, :] += 2.0 * rate * r[frm, :, frm, :]
    out[frm, :, :, :] -= rate * r[frm, :, :, :]
    out[:, :, frm, :] -= rate * r[:, :, frm, :]


def _add_bath(out: np.ndarray, r: np.ndarray, bath: Bath, p: EngineParams) -> None:
    for rate, (to, frm) in jump_rates(bath, p):
        _add_dissipator(out, r, rate, to, frm)


@lru_cache(maxsize=32)
def _ladder(n_field: int) -> np.ndarray:
    """sqrt(1), ..., sqrt(n_field - 1): the off-diagonal of a."""
    return np.sqrt(np.arange(1, n_field, dtype=float))


def _jc_commutator(r: np.ndarray, p: EngineParams) -> np.ndarray:
    """[H_JC, rho] on the block view, using that a is bidiagonal."""
    gs = p.g * _ladder(p.n_field)
    out = np.zeros_like(r)
    # H rho: row block 0 gets g a^+ rho[1], row block 1 gets g a rho[0]
    out[0, 1:] += gs[:, None, None] * r[1, :-1]
    out[1, :-1] += gs[:, None, None] * r[0, 1:]
    # rho H: column block 0 gets g rho[:, 1] a, column block 1 gets g rho[:, 0] a^+
    out[:, :, 0, 1:] -= r[:, :, 1, :-1] * gs
    out[:, :, 1, :-1] -= r[:, :, 0, 1:] * gs
    return out


def liouvillian(bath: Bath, rho: QOperator, p: EngineParams) -> QOperator:
    """Apply the local Liouvillian L_bath to rho."""
    r = _blocks(rho, p)
    out = np.zeros_like(r)
    _add_bath(out, r, bath, p)
    return out.reshape(p.dim, p.dim)


def master_rhs(rho: QOperator, p: EngineParams, frame: Frame = Frame.ROTATING) -> QOperator:
    """Right-hand side of the master equation.

    In the rotating frame the coherent part is [H_JC, rho] only; the
    Liouvillians are the same in both frames.
    """
    r = _blocks(rho, p)
    out = -1j * _jc_commutator(r, p)
    _add_bath(out, r, Bath.HOT, p)
    _add_bath(out, r, Bath.COLD, p)
    drho = out.reshape(p.dim, p.dim)
    if frame is Frame.LAB:
        drho += _free_phase_matrix(p) * r.reshape(p.dim, p.dim)
    return drho


def classify_regime(p: EngineParams) -> RegimeTag:
    """Masing regime from the sign of omega_c/T_c - omega_h/T_h."""
    cold = p.omega_c / p.T_c
    hot = p.omega_h / p.T_h
    if abs(cold - hot) <= REGIME_REL_TOL * max(abs(cold), abs(hot)):
        return RegimeTag.AT
    return RegimeTag.BELOW if cold < hot else RegimeTag.ABOVE


def effective_temperature(p: EngineParams) -> float:
    """Temperature of the thermal field the maser relaxes to below threshold.

    Raises:
        RegimeError: At or above threshold, where it diverges or is negative
    """
    regime = classify_regime(p)
    if regime is not RegimeTag.BELOW:
        raise RegimeError(
            f"Effective temperature is undefined {regime.value} threshold",
            criterion="regime",
        )
    return p.omega_f / (p.omega_h / p.T_h - p.omega_c / p.T_c)
