"""Time integration of the maser and trajectory records."""

__all__ = [
    'Trajectory',
    'AUDIT_FIELDS',
    'integrate',
    'rk4_step',
    'ProgressCallback',
    'ehrenfest_rhs',
    'ehrenfest_residuals',
    'EhrenfestResiduals',
    'scalar_observer',
    'atom_field_observer',
    'populations',
    'fock_populations',
    'sigma_plus_a',
    'fock_tail',
]

from .trajectory import AUDIT_FIELDS, Trajectory
from .integrator import ProgressCallback, integrate, rk4_step
from .ehrenfest import EhrenfestResiduals, ehrenfest_residuals, ehrenfest_rhs
from .observers import (
    atom_field_observer,
    fock_populations,
    fock_tail,
    populations,
    scalar_observer,
    sigma_plus_a,
)
