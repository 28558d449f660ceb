"""Three-level maser model."""

from .model import (
    bath_occupation,
    build_free_hamiltonian,
    build_hamiltonian,
    build_interaction_hamiltonian,
    classify_regime,
    dissipator_apply,
    effective_temperature,
    free_energies,
    jump_operators,
    jump_rates,
    liouvillian,
    master_rhs,
    thermal_occupation,
)

__all__ = [
    'bath_occupation',
    'build_free_hamiltonian',
    'build_hamiltonian',
    'build_interaction_hamiltonian',
    'classify_regime',
    'dissipator_apply',
    'effective_temperature',
    'free_energies',
    'jump_operators',
    'jump_rates',
    'liouvillian',
    'master_rhs',
    'thermal_occupation',
]
