"""
Observables of the cavity field: photon statistics, Husimi Q-function and
Poissonian / phase-averaged coherent states.
"""
import logging
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np
from scipy.stats import poisson

from ...shared.constants import MIN_PHASES, QGRID_PADDING, QGRID_RESOLUTION, QGRID_SCALE
from ...shared.types import QOperator, RealVector
from ..errors import TruncationWarning
from ..operators import as_operator, coherent_vectors, truncation_inadequate

logger = logging.getLogger(__name__)

MIN_MEAN_FOR_G2 = 1e-9
POISSON_TRUNCATION_WARN = 1e-12
Q_EDGE_MASS_TOL = 1e-6


@dataclass(frozen=True)
class PhotonStats:
    """Photon-number statistics of a field state.

    g2 is None when the field is too close to the vacuum.
    """
    mean: float
    g2: Optional[float]
    distribution: RealVector

    @property
    def variance(self) -> float:
        n = np.arange(self.distribution.size)
        return float(self.distribution @ n**2 - self.mean**2)


def photon_stats(rho_f: QOperator) -> PhotonStats:
    """Mean photon number, g2(0) = <a+a+aa>/<a+a>^2 and Fock distribution."""
    rho_f = as_operator(rho_f)
    p_n = np.real(np.diagonal(rho_f)).copy()
    n = np.arange(p_n.size, dtype=float)
    mean = float(p_n @ n)
    if mean <= MIN_MEAN_FOR_G2:
        return PhotonStats(mean=mean, g2=None, distribution=p_n)
    return PhotonStats(mean=mean, g2=float(p_n @ (n * (n - 1.0))) / mean**2, distribution=p_n)


@dataclass(frozen=True)
class QGridSpec:
    """Square phase-space window re x im with resolution points per axis."""
    re_range: tuple[float, float]
    im_range: tuple[float, float]
    resolution: int = QGRID_RESOLUTION

    def axes(self) -> tuple[RealVector, RealVector]:
        return (
            np.linspace(*self.re_range, self.resolution),
            np.linspace(*self.im_range, self.resolution),
        )

    @property
    def cell_area(self) -> float:
        d_re = (self.re_range[1] - self.re_range[0]) / (self.resolution - 1)
        d_im = (self.im_range[1] - self.im_range[0]) / (self.resolution - 1)
        return d_re * d_im


def default_grid_spec(
    mean_photons: float,
    resolution: int = QGRID_RESOLUTION,
    scale: float = QGRID_SCALE,
    padding: float = QGRID_PADDING,
) -> QGridSpec:
    """Grid over [-scale r, scale r]^2 with r = sqrt(<n>) + padding."""
    r = float(scale * (np.sqrt(max(mean_photons, 0.0)) + padding))
    return QGridSpec(re_range=(-r, r), im_range=(-r, r), resolution=resolution)


@dataclass(frozen=True)
class QGrid:
    """Q-function values; rows follow the imaginary axis, columns the real axis."""
    spec: QGridSpec
    values: np.ndarray

    @property
    def total(self) -> float:
        """Riemann sum of Q times the cell area."""
        return float(np.sum(self.values) * self.spec.cell_area)

    def to_csv(self, path: Path) -> None:
        """Write a 3-line header (ranges, resolution) and the dense matrix."""
        header = "\n".join([
            f"re_range,{float(self.spec.re_range[0])!r},{float(self.spec.re_range[1])!r}",
            f"im_range,{float(self.spec.im_range[0])!r},{float(self.spec.im_range[1])!r}",
            f"resolution,{self.spec.resolution}",
        ])
        np.savetxt(path, self.values, delimiter=",", fmt="%.17g", header=header, comments="# ")

    @classmethod
    def from_csv(cls, path: Path) -> "QGrid":
        with open(path, "r") as f:
            header = [next(f).lstrip("# ").strip().split(",") for _ in range(3)]
        meta = {row[0]: row[1:] for row in header}
        spec = QGridSpec(
            re_range=(float(meta["re_range"][0]), float(meta["re_range"][1])),
            im_range=(float(meta["im_range"][0]), float(meta["im_range"][1])),
            resolution=int(meta["resolution"][0]),
        )
        values = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
        return cls(spec=spec, values=values)


def q_function(rho_f: QOperator, spec: QGridSpec) -> QGrid:
    """Husimi Q(alpha) = <alpha|rho_f|alpha>/pi on the grid.

    Coherent vectors are renormalised after truncation, which inflates Q
    wherever |alpha> leaks past the last Fock level. Grid corners beyond the
    truncation are harmless while the state has no weight there; a single
    TruncationWarning is emitted when the inflated Q mass exceeds
    Q_EDGE_MASS_TOL.
    """
    rho_f = as_operator(rho_f)
    dim = rho_f.shape[0]
    re, im = spec.axes()
    mean = float(np.real(np.diagonal(rho_f)) @ np.arange(dim))
    if min(-re[0], re[-1], -im[0], im[-1]) < np.sqrt(max(mean, 0.0)) + QGRID_PADDING:
        logger.warning("Q-function grid does not cover the support of the state")

    values = np.empty((im.size, re.size))
    rho_t = rho_f.T
    for row, y in enumerate(im):
        vecs = coherent_vectors(re + 1j * y, dim)
        values[row] = np.real(np.sum(vecs.conj() * (vecs @ rho_t), axis=1))
    values /= np.pi

    radius_sq = re[None, :] ** 2 + im[:, None] ** 2
    leaked = poisson.sf(dim - 1, radius_sq)
    edge_mass = float(np.sum(values * leaked) * spec.cell_area)
    if edge_mass > Q_EDGE_MASS_TOL:
        warnings.warn(
            f"Q-function mass {edge_mass:.3e} depends on levels beyond the {dim}-level truncation",
            TruncationWarning,
        )
    return QGrid(spec=spec, values=values)


def radial_peak(grid: QGrid) -> float:
    """Radius of the maximum of the angle-averaged Q-function."""
    re, im = grid.spec.axes()
    radius = np.hypot(re[None, :], im[:, None]).ravel()
    width = (re[-1] - re[0]) / (grid.spec.resolution - 1)
    edges = np.arange(0.0, radius.max() + width, width)
    sums, _ = np.histogram(radius, bins=edges, weights=grid.values.ravel())
    counts, _ = np.histogram(radius, bins=edges)
    profile = np.where(counts > 0, sums / np.maximum(counts, 1), -np.inf)
    k = int(np.argmax(profile))
    return float(0.5 * (edges[k] + edges[k + 1]))


def poisson_state(mean: float, dim: int) -> QOperator:
    """Diagonal Poissonian state of the given mean, renormalised after truncation.

    Raises:
        ValueError: If mean < 0 or the truncation cannot hold the state
    """
    if mean < 0:
        raise ValueError(f"Mean photon number must be non-negative, got {mean}")
    if truncation_inadequate(np.sqrt(mean), dim):
        raise ValueError(f"Mean photon number {mean} is too large for {dim} Fock levels")
    p_n = poisson.pmf(np.arange(dim), mean)
    lost = 1.0 - float(np.sum(p_n))
    if lost > POISSON_TRUNCATION_WARN:
        warnings.warn(
            f"Truncation to {dim} levels drops Poisson weight {lost:.3e}", TruncationWarning
        )
    return np.diag(p_n / np.sum(p_n)).astype(np.complex128)


def phase_averaged_coherent(alpha: float, dim: int, n_phases: Optional[int] = None) -> QOperator:
    """Uniform mixture of |alpha e^{i phi}> over n_phases equidistant phases.

    Raises:
        ValueError: If fewer than 64 phases are requested
    """
    if n_phases is None:
        n_phases = max(MIN_PHASES, 4 * dim)
    if n_phases < MIN_PHASES:
        raise ValueError(f"At least {MIN_PHASES} phases are required, got {n_phases}")
    phases = 2.0 * np.pi * np.arange(n_phases) / n_phases
    vecs = coherent_vectors(alpha * np.exp(1j * phases), dim)
    return (vecs.T @ vecs.conj()) / n_phases
