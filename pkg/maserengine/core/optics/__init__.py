"""Cavity-field observables and laser-state analytics."""

__all__ = [
    'PhotonStats',
    'photon_stats',
    'QGridSpec',
    'QGrid',
    'default_grid_spec',
    'q_function',
    'radial_peak',
    'poisson_state',
    'phase_averaged_coherent',
    'LaserAnalytics',
    'gaussian_laser_analytics',
    'classical_limit_efficiencies',
    'gaussian_photon_distribution',
]

from .field import (
    PhotonStats,
    QGrid,
    QGridSpec,
    default_grid_spec,
    phase_averaged_coherent,
    photon_stats,
    poisson_state,
    q_function,
    radial_peak,
)
from .laser import (
    LaserAnalytics,
    classical_limit_efficiencies,
    gaussian_laser_analytics,
    gaussian_photon_distribution,
)
