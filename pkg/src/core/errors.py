"""
Exception hierarchy for the Pauli channel minimax toolkit.

Every error raised on purpose by the library derives from PauliMinimaxError so
the CLI can map it to an exit code without catching unrelated failures.
"""

from typing import Any, List, Optional


class PauliMinimaxError(Exception):
    """Base class for all library errors."""


class RationalParseError(PauliMinimaxError, ValueError):
    """Raised when text cannot be read as an exact fraction."""


class RationalOverflowError(PauliMinimaxError, OverflowError):
    """Raised when a reduced fraction does not fit the configured integer width."""


class InvalidDistributionError(PauliMinimaxError, ValueError):
    """Raised when a Pauli probability vector is negative or does not sum to one."""

    def __init__(self, message: str, channel: Optional[str] = None):
        super().__init__(message)
        self.channel = channel


class NotConcaveError(PauliMinimaxError, ValueError):
    """Raised when a maximization routine receives a non-concave function."""


class AmbiguousPlateauError(PauliMinimaxError):
    """Raised when the worst-prior plateau cannot be attached to one case pattern."""


class InconsistentCrossingError(PauliMinimaxError):
    """Raised when the crossing of two eigenstate curves admits no mixing weight."""


class ThreeWayCrossingError(PauliMinimaxError):
    """
    Raised when more than two eigenstate curves meet at the worst prior.

    The candidates found from every increasing/decreasing pair are attached so
    callers can still use them, knowing the set is not proven complete.
    """

    def __init__(self, message: str, candidates: Optional[List[Any]] = None):
        super().__init__(message)
        self.candidates = list(candidates or [])


class InternalInconsistencyError(PauliMinimaxError, AssertionError):
    """Raised when two independent routes to the same answer disagree."""


class NotHermitianError(PauliMinimaxError, ValueError):
    """Raised when a matrix handed to the oracle is not Hermitian."""


class NoConvergenceError(PauliMinimaxError, ArithmeticError):
    """Raised when the Jacobi eigensolver exhausts its sweeps."""


class NonUnitModulusError(PauliMinimaxError, ValueError):
    """Raised when a unitary eigenvalue does not lie on the unit circle."""


class InvalidDensityMatrixError(PauliMinimaxError, ValueError):
    """Raised when a matrix is not a valid density operator."""


class InputFileError(PauliMinimaxError, ValueError):
    """Raised when a pair or state file cannot be read, with its location."""

    def __init__(
        self, message: str, path: Optional[str] = None, line: Optional[int] = None
    ):
        super().__init__(message)
        self.path = path
        self.line = line
