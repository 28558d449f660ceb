"""
Writers and readers for the files of a run directory.

Numbers are written with 17 significant digits so that identical runs
produce identical bytes and stored trajectories reload exactly.
"""
import logging
from pathlib import Path

import numpy as np
from pydantic import BaseModel
from scipy.stats import poisson

from ... import __version__
from ...config import load_config
from ...config.parsing import write_config
from ...config.models import RunConfig
from ...shared.constants import LEDGER_COLUMNS
from ...shared.types import RealVector
from ...shared.utils import file_sha256
from ..dynamics import Trajectory
from ..optics import gaussian_photon_distribution
from ..work import Landscape
from .reports import Manifest

logger = logging.getLogger(__name__)

CONFIG_FILE = "config.json"
LEDGER_FILE = "ledger.csv"
QGRID_FILE = "qgrid.csv"
EFFICIENCY_FILE = "efficiency.json"
AUDIT_FILE = "audit.json"
PNUM_FILE = "pnum.csv"
LANDSCAPE_FILE = "landscape.csv"
MANIFEST_FILE = "manifest.json"

NUMBER_FORMAT = "%.17g"


def _write_table(path: Path, columns: tuple[str, ...], data: np.ndarray) -> Path:
    np.savetxt(path, data, delimiter=",", fmt=NUMBER_FORMAT, header=",".join(columns), comments="")
    logger.debug(f"Wrote {data.shape[0]} rows to {path}")
    return path


def _read_table(path: Path) -> tuple[list[str], np.ndarray]:
    with open(path, "r", encoding="utf-8") as f:
        header = f.readline().strip().split(",")
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return header, data


def write_ledger(traj: Trajectory, path: Path) -> Path:
    """One row per record in the frozen ledger column order.

    Columns the trajectory did not record are written as NaN.
    """
    n = len(traj)
    data = np.column_stack([
        traj.t if name == "t" else (traj.column(name) if traj.has(name) else np.full(n, np.nan))
        for name in LEDGER_COLUMNS
    ])
    return _write_table(path, LEDGER_COLUMNS, data.reshape(n, len(LEDGER_COLUMNS)))


def read_ledger(path: Path) -> dict[str, np.ndarray]:
    """Columns of a ledger file by name.

    Raises:
        ValueError: If the header is not the ledger column order
    """
    header, data = _read_table(path)
    if tuple(header) != LEDGER_COLUMNS:
        raise ValueError(f"{path} does not hold ledger columns: {header}")
    return {name: data[:, k] for k, name in enumerate(header)}


def load_trajectory(run_dir: Path) -> Trajectory:
    """Rebuild a trajectory from config.json and ledger.csv of a run directory.

    The instantaneous joint entropy rate is recovered from the stored
    entropy production, so audits on the reloaded trajectory repeat the
    original ones.

    Raises:
        ConfigError: If config.json is missing or invalid
        FileNotFoundError: If ledger.csv is missing
    """
    run_dir = Path(run_dir)
    config = load_config(run_dir / CONFIG_FILE)
    ledger_path = run_dir / LEDGER_FILE
    if not ledger_path.exists():
        raise FileNotFoundError(f"No {LEDGER_FILE} in {run_dir}")
    columns = read_ledger(ledger_path)
    times = columns.pop("t")
    p = config.params
    sigma = columns["sigma"]
    if not np.all(np.isnan(sigma)):
        columns["dS_af"] = sigma + columns["J_h"] / p.T_h + columns["J_c"] / p.T_c
    logger.info(f"Loaded {times.size} records of '{config.name}' from {run_dir}")
    return Trajectory.from_columns(times, columns, params=p, frame=config.frame)


def write_pnum(distribution: RealVector, path: Path) -> Path:
    """Fock distribution beside Poisson and Gaussian laws of the same mean."""
    distribution = np.asarray(distribution, dtype=float)
    n = np.arange(distribution.size, dtype=float)
    mean = float(distribution @ n)
    if mean > 0:
        reference = poisson.pmf(n, mean)
        gaussian = gaussian_photon_distribution(n, mean)
    else:
        reference = (n == 0).astype(float)
        gaussian = np.full(n.size, np.nan)
    data = np.column_stack([n, distribution, reference, gaussian])
    return _write_table(path, ("n", "p_n", "poisson", "gaussian"), data)


def write_landscape(landscape: Landscape, path: Path) -> Path:
    data = np.column_stack([
        landscape.energies, landscape.thermal, landscape.pure, landscape.temperatures
    ])
    return _write_table(path, ("E", "F_thermal", "F_pure", "T"), data.reshape(-1, 4))


def write_json(model: BaseModel, path: Path) -> Path:
    path.write_text(model.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.debug(f"Wrote {path}")
    return path


def write_run_config(config: RunConfig, run_dir: Path) -> Path:
    return write_config(config, run_dir / CONFIG_FILE)


def write_manifest(
    run_dir: Path, name: str, files: list[Path], partial: bool, exit_status: int
) -> Manifest:
    """Hash every written output and store the manifest in the run directory."""
    manifest = Manifest(
        name=name,
        version=__version__,
        partial=partial,
        exit_status=exit_status,
        files={path.name: file_sha256(path) for path in sorted(files)},
    )
    write_json(manifest, run_dir / MANIFEST_FILE)
    return manifest
