"""
Exception and warning types for maserengine.
"""
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .dynamics.trajectory import Trajectory


class MaserError(Exception):
    """Base error."""
    def __init__(self, message: str, criterion: Optional[str] = None):
        self.criterion = criterion
        super().__init__(message)


class DimensionError(MaserError, ValueError):
    """Operator dimensions do not match."""
    pass


class NotHermitianError(MaserError, ValueError):
    """Operator is not Hermitian within tolerance."""
    pass


class UnphysicalStateError(MaserError, ValueError):
    """Input is not a valid density matrix."""
    pass


class EntropyUnreachableError(MaserError, ValueError):
    """No Gibbs state of the truncated space has the requested entropy."""
    pass


class RegimeError(MaserError, ValueError):
    """Quantity is undefined in the current operation regime."""
    pass


class ConfigError(MaserError, ValueError):
    """Configuration rejected."""
    pass


class SteadyStateError(MaserError):
    """Analysis window is not in steady-state operation."""
    pass


class NotAnEngineError(MaserError):
    """No heat flows from the hot bath over the window."""
    pass


class IntegrationError(MaserError):
    """Numerical integration failed a hard hygiene check."""
    def __init__(
        self,
        message: str,
        criterion: Optional[str] = None,
        trajectory: Optional["Trajectory"] = None,
    ):
        self.trajectory = trajectory
        super().__init__(message, criterion)


class TruncationError(IntegrationError):
    """Field population reached the top of the truncated Fock space."""
    pass


class TruncationWarning(UserWarning):
    """Truncated Fock space may be too small for the requested state."""
    pass


class NegativityWarning(UserWarning):
    """Density matrix has a small negative eigenvalue."""
    pass
