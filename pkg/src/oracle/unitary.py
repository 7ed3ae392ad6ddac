"""
Discrimination of two unitary channels.

With the eigenvalues z_k of U^dagger V on the unit circle, the optimal Bayes
risk depends only on the distance D from the origin to their convex hull.
"""

import logging
import math
from typing import List, Sequence

import numpy as np

from src.config import get_settings
from src.core.errors import NonUnitModulusError

logger = logging.getLogger(__name__)


def hull_distance(eigenvalues: Sequence[complex]) -> float:
    """
    Distance from the origin to the convex hull of points on the unit circle.

    The hull misses the origin only when all points fit in an arc shorter
    than pi; the distance is then cos of half that arc.

    Raises:
        NonUnitModulusError: a point is off the unit circle
    """
    if not eigenvalues:
        raise ValueError("At least one eigenvalue is required")
    tolerance = get_settings().unit_modulus_tolerance
    for value in eigenvalues:
        if abs(abs(value) - 1.0) > tolerance:
            raise NonUnitModulusError(
                f"Eigenvalue {value} has modulus {abs(value):.15g}, expected 1"
            )
    angles = sorted(
        math.atan2(value.imag, value.real) % (2 * math.pi) for value in eigenvalues
    )
    gaps = [b - a for a, b in zip(angles, angles[1:])]
    gaps.append(2 * math.pi - (angles[-1] - angles[0]))
    largest = max(gaps)
    if largest <= math.pi:
        return 0.0
    return math.cos((2 * math.pi - largest) / 2)


def unitary_bayes_risk(eigenvalues: Sequence[complex], p: float) -> float:
    """
    Optimal Bayes risk for two unitaries.

    Args:
        eigenvalues: Eigenvalues of U^dagger V, all of unit modulus
        p: Prior of the first unitary, in (0, 1)

    Returns:
        1/2 (1 - sqrt(1 - 4 p (1 - p) D^2))
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"Prior {p} outside (0, 1)")
    distance = hull_distance([complex(value) for value in eigenvalues])
    radicand = max(0.0, 1.0 - 4.0 * p * (1.0 - p) * distance * distance)
    return 0.5 * (1.0 - math.sqrt(radicand))


def unitary_minimax_risk(eigenvalues: Sequence[complex]) -> float:
    """Minimax risk for two unitaries; the worst prior is 1/2."""
    return unitary_bayes_risk(eigenvalues, 0.5)


def unitary_pair_eigenvalues(first: np.ndarray, second: np.ndarray) -> List[complex]:
    """Eigenvalues of first^dagger second for two unitary matrices."""
    first = np.asarray(first, dtype=complex)
    second = np.asarray(second, dtype=complex)
    if first.shape != second.shape or first.shape[0] != first.shape[1]:
        raise ValueError(f"Incompatible shapes {first.shape} and {second.shape}")
    values = np.linalg.eigvals(first.conj().T @ second)
    logger.debug(f"Eigenvalues of U^dagger V: {values}")
    return [complex(value) for value in values]
