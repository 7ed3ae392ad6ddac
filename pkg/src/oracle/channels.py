"""
Dense density matrices produced by Pauli channels.

These builders never use the closed-form risk expressions: they apply the
channel to an explicit input operator so the Helstrom computations downstream
form an independent check.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from src.config import get_settings
from src.core.channels import PauliChannel
from src.core.errors import InvalidDensityMatrixError
from src.core.models import BlochVector
from src.oracle.linalg import HermitianMatrix, eigh

logger = logging.getLogger(__name__)

_PAULIS = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# (|00> + |11>) / sqrt(2)
_BELL = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)


def pauli_matrices() -> Tuple[np.ndarray, ...]:
    """Copies of I, sigma_x, sigma_y, sigma_z."""
    return tuple(matrix.copy() for matrix in _PAULIS)


def bloch_density(state: BlochVector) -> HermitianMatrix:
    """rho = 1/2 (I + n . sigma)."""
    nx, ny, nz = state.n
    return HermitianMatrix(
        0.5 * (_PAULIS[0] + nx * _PAULIS[1] + ny * _PAULIS[2] + nz * _PAULIS[3])
    )


def apply_channel(channel: PauliChannel, state: BlochVector) -> HermitianMatrix:
    """
    Output of a Pauli channel for a pure qubit input.

    Args:
        channel: Pauli channel
        state: Input Bloch vector

    Returns:
        sum_alpha q_alpha sigma_alpha rho sigma_alpha
    """
    rho = bloch_density(state).entries
    output = sum(
        float(q) * sigma @ rho @ sigma for q, sigma in zip(channel.q, _PAULIS)
    )
    return HermitianMatrix(output)


def bell_output(channel: PauliChannel) -> HermitianMatrix:
    """
    Output of channel (x) identity on the maximally entangled state.

    Args:
        channel: Pauli channel

    Returns:
        4x4 Bell-diagonal density matrix with eigenvalues q_alpha
    """
    projector = np.outer(_BELL, _BELL.conj())
    output = np.zeros((4, 4), dtype=complex)
    for q, sigma in zip(channel.q, _PAULIS):
        local = np.kron(sigma, _PAULIS[0])
        output += float(q) * local @ projector @ local.conj().T
    return HermitianMatrix(output)


def require_density_matrix(
    matrix: HermitianMatrix, name: str = "matrix", tolerance: Optional[float] = None
) -> HermitianMatrix:
    """
    Return the matrix if it is a density operator.

    Raises:
        InvalidDensityMatrixError: trace differs from one or an eigenvalue is
            negative beyond the tolerance
    """
    if tolerance is None:
        tolerance = get_settings().density_tolerance
    if abs(matrix.trace - 1.0) > tolerance:
        raise InvalidDensityMatrixError(f"{name}: trace {matrix.trace:.12g} is not 1")
    values, _ = eigh(matrix)
    if values[-1] < -tolerance:
        raise InvalidDensityMatrixError(
            f"{name}: eigenvalue {values[-1]:.3e} is negative"
        )
    return matrix


def is_density_matrix(
    matrix: HermitianMatrix, tolerance: Optional[float] = None
) -> bool:
    """Unit trace and no eigenvalue below -tolerance."""
    try:
        require_density_matrix(matrix, tolerance=tolerance)
    except InvalidDensityMatrixError:
        return False
    return True
