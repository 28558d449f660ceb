"""Dense operator algebra: tensor products, partial traces, spectra."""

from .algebra import (
    DensityAudit,
    Spectrum,
    as_operator,
    check_density,
    coherent_vector,
    coherent_vectors,
    density_audit,
    density_eigenvalues,
    destroy,
    hermitian_eig,
    hermiticity_error,
    identity,
    kron,
    number_operator,
    partial_trace,
    sanitize_density,
    transition,
    truncation_inadequate,
)

__all__ = [
    'DensityAudit',
    'Spectrum',
    'as_operator',
    'check_density',
    'coherent_vector',
    'coherent_vectors',
    'density_audit',
    'density_eigenvalues',
    'destroy',
    'hermitian_eig',
    'hermiticity_error',
    'identity',
    'kron',
    'number_operator',
    'partial_trace',
    'sanitize_density',
    'transition',
    'truncation_inadequate',
]
