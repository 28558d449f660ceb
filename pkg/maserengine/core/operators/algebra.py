"""
Dense complex operator algebra on finite Hilbert spaces.
"""
import logging
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.linalg

from ...shared.constants import (
    HARD_FAILURE_TOL,
    HERMITIAN_TOL,
    NEGATIVITY_TOL,
    DENSITY_TRACE_TOL,
)
from ...shared.types import QOperator, RealVector, Subsystem
from ..errors import (
    DimensionError,
    IntegrationError,
    NegativityWarning,
    NotHermitianError,
    TruncationWarning,
    UnphysicalStateError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Spectrum:
    """Eigen-decomposition of a Hermitian operator, ascending eigenvalues."""
    eigenvalues: RealVector
    eigenvectors: QOperator

    def reconstruct(self) -> QOperator:
        """Return V diag(lambda) V^dagger."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    @property
    def dim(self) -> int:
        return self.eigenvalues.size


class DensityAudit(NamedTuple):
    """Hygiene figures of a density matrix."""
    trace_error: float
    hermiticity_error: float
    min_eigenvalue: float


def as_operator(matrix) -> QOperator:
    """Coerce to a square complex matrix."""
    op = np.asarray(matrix, dtype=np.complex128)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise DimensionError(f"Operator must be a square matrix, got shape {op.shape}")
    return op


def identity(dim: int) -> QOperator:
    return np.eye(dim, dtype=np.complex128)


def destroy(dim: int) -> QOperator:
    """Truncated annihilation operator a on dim Fock levels."""
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=1).astype(np.complex128)


def number_operator(dim: int) -> QOperator:
    return np.diag(np.arange(dim, dtype=float)).astype(np.complex128)


def transition(i: int, j: int, dim: int) -> QOperator:
    """The operator |i><j| on a dim-dimensional space (0-based)."""
    op = np.zeros((dim, dim), dtype=np.complex128)
    op[i, j] = 1.0
    return op


def kron(a: QOperator, b: QOperator) -> QOperator:
    """Kronecker product a (x) b."""
    return np.kron(as_operator(a), as_operator(b))


def hermiticity_error(op: QOperator) -> float:
    """Largest elementwise deviation of op from op^dagger."""
    return float(np.max(np.abs(op - op.conj().T))) if op.size else 0.0


def partial_trace(rho: QOperator, keep: Subsystem, dims: tuple[int, int]) -> QOperator:
    """Reduced state on the kept factor of a bipartite (atom, field) space.

    Args:
        rho: Operator on the joint space of dimension dims[0] * dims[1]
        keep: Factor to keep
        dims: (atom dimension, field dimension)

    Returns:
        Reduced operator on the kept factor

    Raises:
        DimensionError: If rho does not live on the given joint space
    """
    rho = as_operator(rho)
    d_a, d_f = dims
    if rho.shape[0] != d_a * d_f:
        raise DimensionError(
            f"Operator of dimension {rho.shape[0]} does not match dims {dims} "
            f"(expected {d_a * d_f})"
        )
    blocks = rho.reshape(d_a, d_f, d_a, d_f)
    if keep is Subsystem.ATOM:
        return np.einsum("injn->ij", blocks)
    return np.einsum("inim->nm", blocks)


def hermitian_eig(h: QOperator) -> Spectrum:
    """Spectral decomposition of a Hermitian operator.

    Raises:
        NotHermitianError: If h deviates from h^dagger by more than 1e-10
    """
    h = as_operator(h)
    error = hermiticity_error(h)
    if error > HERMITIAN_TOL:
        raise NotHermitianError(f"Operator is not Hermitian (deviation {error:.3e})")
    values, vectors = scipy.linalg.eigh(0.5 * (h + h.conj().T))
    order = np.argsort(values, kind="stable")
    return Spectrum(eigenvalues=values[order], eigenvectors=vectors[:, order])


def density_eigenvalues(rho: QOperator) -> RealVector:
    """Ascending eigenvalues of the Hermitian part of rho."""
    rho = as_operator(rho)
    return scipy.linalg.eigvalsh(0.5 * (rho + rho.conj().T))


def density_audit(rho: QOperator) -> DensityAudit:
    """Trace error, Hermiticity error and smallest eigenvalue of rho."""
    rho = as_operator(rho)
    return DensityAudit(
        trace_error=float(abs(np.trace(rho) - 1.0)),
        hermiticity_error=hermiticity_error(rho),
        min_eigenvalue=float(density_eigenvalues(rho)[0]),
    )


def check_density(rho: QOperator) -> QOperator:
    """Validate rho as a density matrix.

    Raises:
        UnphysicalStateError: If trace, Hermiticity or positivity fail
    """
    rho = as_operator(rho)
    audit = density_audit(rho)
    if audit.trace_error > DENSITY_TRACE_TOL:
        raise UnphysicalStateError(f"Trace deviates from 1 by {audit.trace_error:.3e}")
    if audit.hermiticity_error > HERMITIAN_TOL:
        raise UnphysicalStateError(
            f"Density matrix is not Hermitian (deviation {audit.hermiticity_error:.3e})"
        )
    if audit.min_eigenvalue < -NEGATIVITY_TOL:
        raise UnphysicalStateError(f"Negative eigenvalue {audit.min_eigenvalue:.3e}")
    return rho


def sanitize_density(rho: QOperator, tol: float = NEGATIVITY_TOL) -> QOperator:
    """Symmetrise and renormalise an integrated density matrix.

    Negative eigenvalues below -tol are flagged with a NegativityWarning
    but never clipped.

    Raises:
        IntegrationError: If the trace deviates by more than 1e-4 or an
            eigenvalue is below -1e-4
    """
    rho = as_operator(rho)
    herm = 0.5 * (rho + rho.conj().T)
    trace = float(np.trace(herm).real)
    if abs(trace - 1.0) > HARD_FAILURE_TOL:
        raise IntegrationError(
            f"Trace drifted to {trace:.6f}; reduce dt or enlarge the truncation",
            criterion="trace",
        )
    min_eig = float(scipy.linalg.eigvalsh(herm)[0])
    if min_eig < -HARD_FAILURE_TOL:
        raise IntegrationError(
            f"Eigenvalue {min_eig:.3e} is negative; reduce dt or enlarge the truncation",
            criterion="positivity",
        )
    if min_eig < -tol:
        warnings.warn(f"Density matrix eigenvalue {min_eig:.3e} below -{tol:g}", NegativityWarning)
    return herm / trace


def truncation_inadequate(alpha_abs: np.ndarray | float, dim: int) -> np.ndarray | bool:
    """Whether a coherent amplitude exceeds |alpha|^2 <= dim - 6|alpha|."""
    alpha_abs = np.asarray(alpha_abs, dtype=float)
    return alpha_abs**2 > dim - 6.0 * alpha_abs


def coherent_vectors(alphas: np.ndarray, dim: int) -> np.ndarray:
    """Truncated, renormalised coherent states for an array of amplitudes.

    Returns:
        Array of shape alphas.shape + (dim,)
    """
    alphas = np.asarray(alphas, dtype=np.complex128)
    flat = alphas.reshape(-1)
    n = np.arange(1, dim, dtype=float)
    # c_n = c_{n-1} alpha / sqrt(n)
    ratios = flat[:, None] / np.sqrt(n)[None, :]
    amps = np.ones((flat.size, dim), dtype=np.complex128)
    amps[:, 1:] = np.cumprod(ratios, axis=1)
    amps *= np.exp(-0.5 * np.abs(flat) ** 2)[:, None]
    norms = np.linalg.norm(amps, axis=1)
    amps /= norms[:, None]
    return amps.reshape(alphas.shape + (dim,))


def coherent_vector(alpha: complex, dim: int) -> np.ndarray:
    """Truncated coherent state |alpha> on dim Fock levels, unit norm.

    Emits a TruncationWarning when |alpha|^2 > dim - 6|alpha|.
    """
    if truncation_inadequate(abs(alpha), dim):
        warnings.warn(
            f"Coherent amplitude |alpha|={abs(alpha):.3f} is too large for {dim} Fock levels",
            TruncationWarning,
        )
    return coherent_vectors(np.array([alpha]), dim)[0]
