"""
Common type definitions used across the maserengine project.
"""
from enum import Enum
from typing import Callable, Mapping, TypeAlias

import numpy as np
from numpy.typing import NDArray

QOperator: TypeAlias = NDArray[np.complex128]
RealVector: TypeAlias = NDArray[np.float64]

# An observer maps a density matrix onto one or more named real observables
Observer: TypeAlias = Callable[[QOperator], Mapping[str, float]]


class Subsystem(Enum):
    """Tensor factors of the joint atom-field space."""
    ATOM = "atom"
    FIELD = "field"


class Bath(Enum):
    """Thermal baths of the maser."""
    HOT = "hot"
    COLD = "cold"


class Frame(str, Enum):
    """Integration frame of the master equation."""
    LAB = "lab"
    ROTATING = "rotating"


class RegimeTag(str, Enum):
    """Operation mode relative to the masing threshold."""
    BELOW = "below"
    AT = "at"
    ABOVE = "above"


class OutputKind(str, Enum):
    """Files a run can produce."""
    LEDGER_CSV = "ledger_csv"
    QGRID = "qgrid"
    EFFICIENCY_JSON = "efficiency_json"
    AUDIT_JSON = "audit_json"
    PNUM_CSV = "pnum_csv"
    LANDSCAPE_CSV = "landscape_csv"
