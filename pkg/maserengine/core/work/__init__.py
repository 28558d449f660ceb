"""Ergotropy, passive states and free-energy decomposition."""

__all__ = [
    'WorkLedger',
    'von_neumann_entropy',
    'entropy_from_eigenvalues',
    'passive_state',
    'ergotropy',
    'mean_energy',
    'gibbs_state',
    'gibbs_populations',
    'gibbs_entropy',
    'match_entropy_temperature',
    'ledger',
    'ledger_from_spectra',
    'free_energy_decomposition',
    'non_extensivity_check',
    'Landscape',
    'free_energy_landscape',
    'temperature_for_energy',
]

from .quantifiers import (
    WorkLedger,
    entropy_from_eigenvalues,
    ergotropy,
    free_energy_decomposition,
    gibbs_entropy,
    gibbs_populations,
    gibbs_state,
    ledger,
    ledger_from_spectra,
    match_entropy_temperature,
    mean_energy,
    non_extensivity_check,
    passive_state,
    von_neumann_entropy,
)
from .landscape import Landscape, free_energy_landscape, temperature_for_energy
