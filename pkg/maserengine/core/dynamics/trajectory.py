"""
Time-indexed record of observables produced by the integrator.
"""
from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np

from ...config.models.engine import EngineParams
from ...shared.types import Frame, QOperator, RealVector
from ...shared.utils import window_mask
from ..operators import DensityAudit

AUDIT_FIELDS = ("trace_error", "hermiticity_error", "min_eigenvalue")


@dataclass
class Trajectory:
    """Observables, hygiene audit and optional snapshots at record times."""
    params: Optional[EngineParams] = None
    frame: Frame = Frame.ROTATING
    times: list[float] = field(default_factory=list)
    observables: dict[str, list[float]] = field(default_factory=dict)
    audit: dict[str, list[float]] = field(
        default_factory=lambda: {name: [] for name in AUDIT_FIELDS}
    )
    snapshots: dict[float, QOperator] = field(default_factory=dict)
    final_state: Optional[QOperator] = None

    @classmethod
    def from_columns(
        cls,
        times: RealVector,
        columns: Mapping[str, RealVector],
        params: Optional[EngineParams] = None,
        frame: Frame = Frame.ROTATING,
    ) -> "Trajectory":
        """Build a trajectory from stored or synthetic columns."""
        traj = cls(params=params, frame=frame)
        traj.times = [float(t) for t in times]
        traj.observables = {name: [float(v) for v in values] for name, values in columns.items()}
        traj.audit = {name: [float("nan")] * len(traj.times) for name in AUDIT_FIELDS}
        return traj

    def append(self, t: float, values: Mapping[str, float], audit: DensityAudit) -> None:
        """Append one record; times must increase strictly."""
        if self.times and t <= self.times[-1]:
            raise ValueError(f"Record time {t} does not follow {self.times[-1]}")
        self.times.append(float(t))
        for name, value in values.items():
            self.observables.setdefault(name, []).append(float(value))
        for name, value in zip(AUDIT_FIELDS, audit):
            self.audit[name].append(float(value))

    def __len__(self) -> int:
        return len(self.times)

    @property
    def t(self) -> np.ndarray:
        return np.asarray(self.times, dtype=float)

    def has(self, name: str) -> bool:
        return name in self.observables

    def column(self, name: str) -> np.ndarray:
        """Observable values over all records.

        Raises:
            KeyError: If the observable was not recorded
        """
        if name not in self.observables:
            raise KeyError(f"Observable '{name}' was not recorded")
        return np.asarray(self.observables[name], dtype=float)

    def audit_column(self, name: str) -> np.ndarray:
        return np.asarray(self.audit[name], dtype=float)

    def mask(self, t_start: float, t_end: float) -> np.ndarray:
        """Records inside [t_start, t_end]."""
        return window_mask(self.t, t_start, t_end)

    def add_column(self, name: str, values: RealVector) -> None:
        """Attach a post-processed column (e.g. entropy production)."""
        values = np.asarray(values, dtype=float)
        if values.size != len(self):
            raise ValueError(f"Column '{name}' has {values.size} values for {len(self)} records")
        self.observables[name] = [float(v) for v in values]
