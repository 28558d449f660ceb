"""
Shared utility functions.
"""
import hashlib
from pathlib import Path

import numpy as np

from ..types import RealVector


def time_derivative(values: RealVector, times: RealVector) -> RealVector:
    """Centered finite-difference derivative over record times.

    Interior points use second-order centered differences, the two end
    points one-sided differences.
    """
    values = np.asarray(values, dtype=float)
    times = np.asarray(times, dtype=float)
    if values.size < 3:
        raise ValueError("At least 3 records are needed for a derivative")
    return np.gradient(values, times, edge_order=1)


def windowed_rate(values: RealVector, times: RealVector) -> float:
    """Least-squares slope of a quantity over a time window."""
    values = np.asarray(values, dtype=float)
    times = np.asarray(times, dtype=float)
    if values.size < 2:
        raise ValueError("At least 2 records are needed for a rate")
    slope, _ = np.polyfit(times, values, 1)
    return float(slope)


def window_mask(times: RealVector, t_start: float, t_end: float) -> np.ndarray:
    """Boolean mask of the records inside [t_start, t_end]."""
    times = np.asarray(times, dtype=float)
    eps = 1e-9 * max(1.0, abs(t_end))
    return (times >= t_start - eps) & (times <= t_end + eps)


def file_sha256(path: Path) -> str:
    """SHA-256 hex digest of a file's content."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()
