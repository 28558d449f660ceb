"""
Basic observers of the joint atom-field state.
"""
from typing import Callable

import numpy as np

from ...config.models.engine import EngineParams
from ...shared.constants import ATOM_DIM
from ...shared.types import Observer, QOperator


def scalar_observer(name: str, fn: Callable[[QOperator], float]) -> Observer:
    """Wrap a state -> real function as a named observer."""
    def observe(rho: QOperator) -> dict[str, float]:
        return {name: float(fn(rho))}
    observe.__name__ = f"observe_{name}"
    return observe


def _blocks(rho: QOperator, p: EngineParams) -> np.ndarray:
    return rho.reshape(ATOM_DIM, p.n_field, ATOM_DIM, p.n_field)


def populations(rho: QOperator, p: EngineParams) -> np.ndarray:
    """Atomic populations P1, P2, P3."""
    r = _blocks(rho, p)
    return np.array([np.trace(r[i, :, i, :]).real for i in range(ATOM_DIM)])


def fock_populations(rho: QOperator, p: EngineParams) -> np.ndarray:
    """Diagonal of the reduced field state."""
    r = _blocks(rho, p)
    return np.einsum("inin->n", r).real


def sigma_plus_a(rho: QOperator, p: EngineParams) -> complex:
    """<sigma_+ a> = sum_n sqrt(n+1) rho[(1, n+1), (2, n)]."""
    r = _blocks(rho, p)
    ladder = np.sqrt(np.arange(1, p.n_field, dtype=float))
    return complex(np.sum(ladder * np.diagonal(r[0, 1:, 1, :-1])))


def fock_tail(rho: QOperator, p: EngineParams, levels: int) -> float:
    """Largest population among the top Fock levels of the truncation."""
    return float(np.max(fock_populations(rho, p)[-levels:]))


def atom_field_observer(p: EngineParams) -> Observer:
    """Populations, photon number and the lasing coherence Im<sigma_+ a>."""
    n = np.arange(p.n_field, dtype=float)

    def observe(rho: QOperator) -> dict[str, float]:
        P = populations(rho, p)
        return {
            "P1": P[0],
            "P2": P[1],
            "P3": P[2],
            "n_mean": float(fock_populations(rho, p) @ n),
            "im_sp_a": sigma_plus_a(rho, p).imag,
        }
    return observe
