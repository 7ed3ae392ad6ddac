"""
Small Hermitian matrices and their eigen-decomposition.

Two-dimensional matrices are diagonalized in closed form, four-dimensional
ones by cyclic complex Jacobi rotations. Both paths return eigenvalues in
descending order with orthonormal eigenvector columns.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from src.config import get_settings
from src.core.errors import NoConvergenceError, NotHermitianError

logger = logging.getLogger(__name__)

SUPPORTED_DIMENSIONS = (2, 4)


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Complex Hermitian matrix of dimension 2 or 4."""

    entries: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.entries, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Expected a square matrix, got shape {matrix.shape}")
        if matrix.shape[0] not in SUPPORTED_DIMENSIONS:
            raise ValueError(f"Unsupported dimension {matrix.shape[0]}")
        asymmetry = float(np.max(np.abs(matrix - matrix.conj().T)))
        if asymmetry > get_settings().hermitian_tolerance:
            raise NotHermitianError(
                f"Matrix deviates from Hermitian by {asymmetry:.3e}"
            )
        # Symmetrize so later arithmetic sees an exactly Hermitian array
        matrix = (matrix + matrix.conj().T) / 2
        matrix.setflags(write=False)
        object.__setattr__(self, "entries", matrix)

    @classmethod
    def from_pairs(cls, rows: Sequence[Sequence[Sequence[float]]]) -> "HermitianMatrix":
        """Build from nested [re, im] pairs as stored in state files."""
        return cls(np.array([[complex(re, im) for re, im in row] for row in rows]))

    def to_pairs(self) -> List[List[Tuple[float, float]]]:
        return [[(value.real, value.imag) for value in row] for row in self.entries]

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    @property
    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.linalg.norm(self.entries))

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        return HermitianMatrix(self.entries + other.entries)

    def __sub__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        return HermitianMatrix(self.entries - other.entries)

    def scaled(self, factor: float) -> "HermitianMatrix":
        return HermitianMatrix(factor * self.entries)

    def expectation(self, other: "HermitianMatrix") -> float:
        """Tr[self . other]."""
        return float(np.trace(self.entries @ other.entries).real)


def _eigh_2x2(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    a, d = matrix[0, 0].real, matrix[1, 1].real
    b = matrix[0, 1]
    if abs(b) == 0.0:
        order = [0, 1] if a >= d else [1, 0]
        return np.array([a, d])[order], np.eye(2, dtype=complex)[:, order]
    mean = (a + d) / 2
    radius = math.hypot((a - d) / 2, abs(b))
    values = np.array([mean + radius, mean - radius])
    vectors = np.empty((2, 2), dtype=complex)
    for k, value in enumerate(values):
        column = np.array([b, value - a], dtype=complex)
        vectors[:, k] = column / np.linalg.norm(column)
    return values, vectors


def _off_diagonal_norm(matrix: np.ndarray) -> float:
    return float(np.linalg.norm(matrix - np.diag(np.diag(matrix))))


def _eigh_jacobi(
    matrix: np.ndarray, tolerance: float, max_sweeps: int
) -> Tuple[np.ndarray, np.ndarray]:
    size = matrix.shape[0]
    work = matrix.copy()
    vectors = np.eye(size, dtype=complex)
    threshold = tolerance * max(1.0, float(np.linalg.norm(matrix)))

    for sweep in range(max_sweeps + 1):
        if _off_diagonal_norm(work) < threshold:
            logger.debug(f"Jacobi converged after {sweep} sweeps")
            values = np.real(np.diag(work))
            order = np.argsort(-values, kind="stable")
            return values[order], vectors[:, order]
        if sweep == max_sweeps:
            break
        for p in range(size - 1):
            for q in range(p + 1, size):
                element = work[p, q]
                magnitude = abs(element)
                if magnitude == 0.0:
                    continue
                phase = element / magnitude
                tau = (work[q, q].real - work[p, p].real) / (2 * magnitude)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1 + tau * tau))
                c = 1 / math.sqrt(1 + t * t)
                s = t * c
                rotation = np.eye(size, dtype=complex)
                rotation[p, p] = c
                rotation[p, q] = s
                rotation[q, p] = -s * phase.conjugate()
                rotation[q, q] = c * phase.conjugate()
                work = rotation.conj().T @ work @ rotation
                vectors = vectors @ rotation

    raise NoConvergenceError(
        f"Jacobi rotations did not converge in {max_sweeps} sweeps "
        f"(off-diagonal norm {_off_diagonal_norm(work):.3e})"
    )


def eigh(matrix: HermitianMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigen-decomposition of a 2x2 or 4x4 Hermitian matrix.

    Args:
        matrix: Hermitian matrix

    Returns:
        (eigenvalues in descending order, eigenvectors as orthonormal columns)

    Raises:
        NoConvergenceError: the Jacobi sweeps exhaust their budget
    """
    if matrix.dim == 2:
        return _eigh_2x2(matrix.entries)
    settings = get_settings()
    return _eigh_jacobi(
        matrix.entries, settings.jacobi_tolerance, settings.jacobi_max_sweeps
    )


def trace_norm(matrix: HermitianMatrix) -> float:
    """Sum of the absolute eigenvalues."""
    values, _ = eigh(matrix)
    return float(np.sum(np.abs(values)))


def spectral_projector(vectors: np.ndarray, mask: Sequence[bool]) -> np.ndarray:
    """Projector onto the span of the selected eigenvector columns."""
    selected = vectors[:, np.asarray(mask, dtype=bool)]
    return selected @ selected.conj().T
